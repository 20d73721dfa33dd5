#pragma once

#include <compare>
#include <string>
#include <vector>

#include "serreq/rational.hpp"

namespace serreq {

/// Integer partition in multiplicity form: sorted (part, multiplicity) pairs
/// with parts >= 1 and multiplicities >= 1.  The empty partition is {}.
class Partition {
public:
    Partition() = default;

    static Partition single(int part, int mult = 1);
    static Partition from_parts(const std::vector<int>& parts);

    /// |mu| = sum i * mu_i
    int size() const;
    /// number of parts, sum mu_i
    int length() const;
    int mult(int part) const;
    bool empty() const { return m_.empty(); }
    int max_part() const { return m_.empty() ? 0 : m_.back().first; }

    /// z_mu = prod i^{mu_i} mu_i!
    Integer z() const;

    /// semigroup sum: entrywise addition of multiplicities
    Partition odot(const Partition& o) const;
    /// multiply every part by n (the partition n*mu)
    Partition stretch(int n) const;

    void add(int part, int mult);
    std::vector<int> parts_desc() const;

    const std::vector<std::pair<int, int>>& entries() const { return m_; }

    auto operator<=>(const Partition&) const = default;

    /// parts in descending order separated by spaces, "" for the empty one
    std::string to_string() const;

private:
    std::vector<std::pair<int, int>> m_;
};

/// Generalized partition: parts of size 0 allowed (valence profiles).
class GeneralizedPartition {
public:
    GeneralizedPartition() = default;

    static GeneralizedPartition single(int part, int mult = 1);

    int size() const;    // sum i * nu_i, parts of size 0 contribute nothing
    int length() const;  // total number of parts including zero parts
    int mult(int part) const;
    bool empty() const { return m_.empty(); }

    GeneralizedPartition odot(const GeneralizedPartition& o) const;
    void add(int part, int mult);

    const std::vector<std::pair<int, int>>& entries() const { return m_; }

    /// |S_nu| = prod_i (i!)^{nu_i} nu_i!
    Integer group_order() const;

    auto operator<=>(const GeneralizedPartition&) const = default;
    std::string to_string() const;

private:
    std::vector<std::pair<int, int>> m_;
};

/// All partitions of n, cached; deterministic order (lexicographic on the
/// descending part lists).
const std::vector<Partition>& partitions_of(int n);

/// All partitions of size <= n, ordered by size then as in partitions_of.
std::vector<Partition> partitions_up_to(int n);

} // namespace serreq
