#pragma once

#include "serreq/graph.hpp"
#include "serreq/ppchar.hpp"

namespace serreq {

/// Smooth-moduli input data {a_h}: one ungraded symmetric function per
/// genus h, validated against the support rule n > 2 - 2h.  A missing
/// genus is the zero series (exact).
class InputSeries {
public:
    enum class Provenance { oracle, fixture, random_formal };

    void set(int h, const SymFunc& ah, Provenance prov = Provenance::random_formal,
             bool allow_support_violation = false);
    bool has(int h) const { return a_.count(h) > 0; }
    const SymFunc& at(int h) const;
    /// container degree of the stored entry; INT_MAX when the entry is zero
    int available_degree(int h) const;
    int max_genus_present() const;
    Provenance provenance(int h) const;
    const std::map<int, SymFunc>& entries() const { return a_; }

    /// sum_h a_h t^{h-1} in the requested container
    GradedSeries assemble(int max_deg, int g_max, std::optional<int> weight_cap) const;

private:
    std::map<int, SymFunc> a_;
    std::map<int, Provenance> prov_;
};

struct support_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormulaTrunc {
    int max_deg = 0;
    int g_max = 0;
    int threads = 1;
};

/// input degrees each theorem needs for exact output in its window
struct RequiredDegrees {
    std::map<int, int> per_genus;
    int abar0_degree = 0; // rational-tail series, fixed-genus theorems only
    std::string to_string() const;
};

RequiredDegrees required_degrees_graded(const FormulaTrunc& tr); // theorem_B / gk / core
RequiredDegrees required_degrees_fixed(int g, int max_deg);       // theorem_A / theorem_ct

/// a_0 = sum_{n >= 3} e^{S_n}(M_{0,n}) to degree N by point counting over
/// the projective line; exactness of every division is asserted.
SymFunc genus0_smooth(int max_deg);

/// c_1 = 1/(1 - a0''), c_2 = (1 + 2 a0-dot)/(1 - psi_2(a0''))
std::pair<SymFunc, SymFunc> caterpillar_insertions(const SymFunc& a0);

/// the three-case vertex insertion of the fixed-genus formula
SymFunc w_insertion(int h, const Partition& mu, const InputSeries& in, const SymFunc& c1,
                    const SymFunc& c2, int max_deg);

/// all-genus generating function as a sum over connected multigraphs
GradedSeries theorem_B(const InputSeries& in, const FormulaTrunc& tr);
/// same value assembled through the orbisum-grouped expansion
GradedSeries theorem_B_theta(const InputSeries& in, const FormulaTrunc& tr);

/// independent oracle: Log(exp(D) Exp(a)) with the edge-attachment operator D
GradedSeries gk_formula(const InputSeries& in, const FormulaTrunc& tr);

/// abar_0 extracted from the genus-0 slice of the oracle pipeline
SymFunc abar0_from_inputs(const InputSeries& in, int max_deg);

/// fixed-genus formula over subdivided stable graphs, g >= 2
SymFunc theorem_A(int g, const InputSeries& in, int max_deg,
                  const SymFunc* abar0 = nullptr);
/// graph-genus restriction (gamma = 0 is compact type)
SymFunc theorem_ct(int g, int gamma, const InputSeries& in, int max_deg,
                   const SymFunc* abar0 = nullptr);

/// torus-fixed stable maps: sum over decorated graph classes acting on abar
GradedSeries theorem_C(const TorusGraph& T, const std::vector<long long>& beta,
                       const GradedSeries& abar, const FormulaTrunc& tr);

/// core functional equation: subdivided min-valence-3 skeletons plus the
/// cycle family, then tails through the compact-type series
GradedSeries theorem_core(const InputSeries& in, const std::map<int, SymFunc>& ct_series,
                          const FormulaTrunc& tr);

/// f o (p_1 + abar0'), or the plethystic inverse direction
SymFunc attach_rational_tails(const SymFunc& f, const SymFunc& abar0, bool inverse = false);

} // namespace serreq
