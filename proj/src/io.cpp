#include "serreq/io.hpp"

#include <fstream>
#include <sstream>

namespace serreq {

namespace {

Rational rational_from_json(const Json& num, const Json& den) {
    Integer n(num.get<std::string>());
    Integer d(den.get<std::string>());
    if (d == 0) throw schema_error("scalar: zero denominator");
    return Rational(n, d);
}

} // namespace

Json scalar_to_json(const MotivicScalar& s) {
    Json terms = Json::array();
    for (auto& [m, c] : s.terms()) {
        Json gens = Json::array();
        if (m.l_exp > 0) gens.push_back({"L", 1, m.l_exp});
        for (auto& [sym, e] : m.syms) gens.push_back({sym.name, sym.adams, e});
        std::ostringstream num, den;
        num << boost::multiprecision::numerator(c);
        den << boost::multiprecision::denominator(c);
        terms.push_back({{"num", num.str()}, {"den", den.str()}, {"gens", gens}});
    }
    return terms;
}

MotivicScalar scalar_from_json(const Json& j) {
    if (!j.is_array()) throw schema_error("scalar: expected an array of terms");
    MotivicScalar s;
    for (auto& t : j) {
        Rational c = rational_from_json(t.at("num"), t.at("den"));
        MotiveMonomial m;
        for (auto& g : t.at("gens")) {
            std::string name = g.at(0).get<std::string>();
            int adams = g.at(1).get<int>();
            int exp = g.at(2).get<int>();
            if (exp < 1) throw schema_error("scalar: generator exponent must be >= 1");
            if (name == "L") {
                if (adams != 1) throw schema_error("scalar: L carries no adams index");
                m.l_exp += exp;
            } else {
                if (adams < 1) throw schema_error("scalar: adams index must be >= 1");
                m.syms.push_back({MotiveSym{name, adams}, exp});
            }
        }
        std::sort(m.syms.begin(), m.syms.end());
        MotivicScalar term;
        term.set_term(m, c);
        s += term;
    }
    return s;
}

Json partition_to_json(const Partition& p) {
    Json out = Json::array();
    for (int part : p.parts_desc()) out.push_back(part);
    return out;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw schema_error("partition: expected an array of parts");
    std::vector<int> parts;
    for (auto& x : j) {
        int p = x.get<int>();
        if (p < 1) throw schema_error("partition: parts must be positive");
        parts.push_back(p);
    }
    return Partition::from_parts(parts);
}

Json symfunc_to_json(const SymFunc& f, const std::string& basis) {
    Json terms = Json::array();
    if (basis == "schur") {
        for (auto& [la, c] : to_schur(f))
            terms.push_back({partition_to_json(la), scalar_to_json(c)});
    } else {
        for (auto& [mu, c] : f.terms())
            terms.push_back({partition_to_json(mu), scalar_to_json(c)});
    }
    return terms;
}

SymFunc symfunc_from_json(const Json& j, int max_deg, const std::string& basis) {
    if (!j.is_array()) throw schema_error("symfunc: expected an array of terms");
    if (basis == "schur") {
        std::map<Partition, MotivicScalar> coeffs;
        for (auto& t : j) coeffs[partition_from_json(t.at(0))] += scalar_from_json(t.at(1));
        return from_schur(coeffs, max_deg);
    }
    SymFunc f(max_deg);
    for (auto& t : j) {
        Partition mu = partition_from_json(t.at(0));
        SymFunc term(max_deg);
        term.set_coeff(mu, scalar_from_json(t.at(1)));
        f += term;
    }
    return f;
}

Json input_series_to_json(const InputSeries& in, const std::string& basis) {
    Json entries = Json::array();
    int max_deg = 0;
    for (auto& [h, f] : in.entries()) {
        max_deg = std::max(max_deg, f.max_deg());
        std::map<int, SymFunc> by_n;
        for (auto& [mu, c] : f.terms()) {
            auto it = by_n.find(mu.size());
            if (it == by_n.end()) it = by_n.emplace(mu.size(), SymFunc(f.max_deg())).first;
            it->second.set_coeff(mu, c);
        }
        for (auto& [n, piece] : by_n)
            entries.push_back(
                {{"genus", h}, {"n", n}, {"terms", symfunc_to_json(piece, basis)}});
    }
    return Json{{"kind", "series"},
                {"max_deg", max_deg},
                {"basis", basis},
                {"entries", entries}};
}

InputSeries input_series_from_json(const Json& j, bool allow_support_violation) {
    if (!j.is_object() || j.value("kind", "") != "series")
        throw schema_error("series file: missing kind == \"series\"");
    int max_deg = j.at("max_deg").get<int>();
    std::string basis = j.value("basis", "powersum");
    std::map<int, SymFunc> acc;
    for (auto& e : j.at("entries")) {
        int h = e.at("genus").get<int>();
        int n = e.at("n").get<int>();
        SymFunc piece = symfunc_from_json(e.at("terms"), max_deg, basis);
        for (auto& [mu, c] : piece.terms()) {
            (void)c;
            if (mu.size() != n) {
                std::ostringstream os;
                os << "series entry (genus " << h << ", n " << n
                   << "): partition of size " << mu.size() << " does not match n";
                throw schema_error(os.str());
            }
        }
        auto it = acc.find(h);
        if (it == acc.end()) it = acc.emplace(h, SymFunc(max_deg)).first;
        it->second += piece;
    }
    InputSeries in;
    for (auto& [h, f] : acc)
        in.set(h, f, InputSeries::Provenance::fixture, allow_support_violation);
    return in;
}

Json graded_to_json(const GradedSeries& f, const std::string& basis) {
    Json entries = Json::array();
    for (auto& [k, s] : f.coeffs()) {
        std::map<int, SymFunc> by_n;
        for (auto& [mu, c] : s.terms()) {
            auto it = by_n.find(mu.size());
            if (it == by_n.end()) it = by_n.emplace(mu.size(), SymFunc(s.max_deg())).first;
            it->second.set_coeff(mu, c);
        }
        for (auto& [n, piece] : by_n)
            entries.push_back(
                {{"genus", k + 1}, {"n", n}, {"terms", symfunc_to_json(piece, basis)}});
    }
    return Json{{"kind", "series"},
                {"max_deg", f.max_deg()},
                {"genus_range", {f.t_floor() + 1, std::min(f.t_max(), 1 << 20) + 1}},
                {"basis", basis},
                {"entries", entries}};
}

GradedSeries graded_from_json(const Json& j) {
    if (!j.is_object() || j.value("kind", "") != "series")
        throw schema_error("series file: missing kind == \"series\"");
    int max_deg = j.at("max_deg").get<int>();
    std::string basis = j.value("basis", "powersum");
    int gmax = 0;
    for (auto& e : j.at("entries")) gmax = std::max(gmax, e.at("genus").get<int>());
    GradedSeries f(max_deg, -1, gmax - 1 + (1 << 10));
    for (auto& e : j.at("entries")) {
        int k = e.at("genus").get<int>() - 1;
        SymFunc s = f.slice(k);
        s += symfunc_from_json(e.at("terms"), max_deg, basis);
        f.set_slice(k, s);
    }
    return f;
}

Json graph_to_json(const VGraph& g) {
    Json verts = Json::array();
    for (int v = 0; v < g.g.nv; ++v) verts.push_back({{"weight", g.w[v]}});
    Json edges = Json::array();
    for (auto& [u, v] : g.g.edges) edges.push_back({u, v});
    return Json{{"vertices", verts}, {"edges", edges}};
}

VGraph vgraph_from_json(const Json& j) {
    std::vector<int> w;
    for (auto& v : j.at("vertices")) w.push_back(v.is_object() ? v.value("weight", 0) : 0);
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    Graph g = Graph::from_edges((int)w.size(), edges);
    return VGraph{g, w};
}

Json torus_to_json(const TorusGraph& t) {
    Json edges = Json::array();
    for (size_t e = 0; e < t.edges.size(); ++e) {
        Json cls = Json::array();
        for (long long c : t.cls[e]) cls.push_back(c);
        edges.push_back({{"ends", {t.edges[e].first, t.edges[e].second}}, {"class", cls}});
    }
    return Json{{"vertices", t.nv}, {"edges", edges}};
}

TorusGraph torus_from_json(const Json& j) {
    TorusGraph t;
    t.nv = j.at("vertices").is_number() ? j.at("vertices").get<int>()
                                        : (int)j.at("vertices").size();
    for (auto& e : j.at("edges")) {
        t.edges.push_back({e.at("ends").at(0).get<int>(), e.at("ends").at(1).get<int>()});
        std::vector<long long> cls;
        for (auto& c : e.at("class")) cls.push_back(c.get<long long>());
        t.cls.push_back(cls);
    }
    t.validate();
    return t;
}

Json w2elem_to_json(const W2Elem& w) {
    Json out = Json::array();
    for (auto& [th, c] : w.terms()) {
        Json entry = Json::array();
        for (auto& [mu, row] : th.entries())
            entry.push_back({partition_to_json(mu), partition_to_json(row)});
        std::ostringstream num, den;
        num << boost::multiprecision::numerator(c);
        den << boost::multiprecision::denominator(c);
        out.push_back({{"theta", entry}, {"num", num.str()}, {"den", den.str()}});
    }
    return out;
}

InputSeries load_input_series(const std::string& path, bool allow_support_violation) {
    return input_series_from_json(load_json(path), allow_support_violation);
}

void save_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw schema_error("cannot open for writing: " + path);
    out << j.dump(1) << "\n";
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw schema_error(path + ": " + e.what());
    }
    return j;
}

namespace {

std::string render_symfunc_lines(const SymFunc& f, const std::string& basis, int genus,
                                 bool show_genus) {
    std::ostringstream os;
    std::map<int, SymFunc> by_n;
    for (auto& [mu, c] : f.terms()) {
        auto it = by_n.find(mu.size());
        if (it == by_n.end()) it = by_n.emplace(mu.size(), SymFunc(f.max_deg())).first;
        it->second.set_coeff(mu, c);
    }
    for (auto& [n, piece] : by_n) {
        if (show_genus) os << "g=" << genus << " ";
        os << "n=" << n << ": "
           << (basis == "schur" ? schur_string(piece) : piece.to_string()) << "\n";
    }
    return os.str();
}

} // namespace

std::string render_table(const GradedSeries& f, const std::string& basis) {
    std::ostringstream os;
    for (auto& [k, s] : f.coeffs()) os << render_symfunc_lines(s, basis, k + 1, true);
    return os.str();
}

std::string render_table(const SymFunc& f, const std::string& basis) {
    return render_symfunc_lines(f, basis, 0, false);
}

} // namespace serreq
