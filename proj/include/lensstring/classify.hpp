#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lensstring/equivariant.hpp"

namespace lensstring {

/// Classical 3-dimensional classification verdict for L(n;k) vs L(n;k').
/// Homotopy equivalent iff k k' = +-q^2 (mod n) for some q; homeomorphic iff
/// k' = +-k^{+-1} (mod n).
struct PairVerdict {
    int n = 0;
    int k = 0;
    int k2 = 0;
    bool homotopy_equivalent = false;
    bool homeomorphic = false;
    std::optional<int> witness;   // q with k k' = sign * q^2
    std::optional<int> sign;      // +1 or -1
};

PairVerdict classify_pair(int n, int k, int k2);

/// Canonical representative of the homeomorphism class of k mod n:
/// min over {k, -k, k^{-1}, -k^{-1}}.
int homeo_class_rep(int n, int k);

/// Per-space counts carried by a search row.
struct SearchCounts {
    CountReport coproduct;
    CountReport cobracket;
};

struct SearchRow {
    int n = 0;
    int k = 0;
    int k2 = 0;
    int witness = 0;
    SearchCounts first;
    SearchCounts second;
    bool qualifies_generator_sum = false;
    bool qualifies_component_union = false;
};

struct SearchResult {
    int max_n = 0;
    Convention convention = Convention::generator_sum;
    std::vector<SearchRow> rows;  // homotopy-equivalent, non-homeomorphic pairs
    std::optional<int> smallest_generator_sum;
    std::optional<int> smallest_component_union;
    /// Which convention reproduces which published headline number; emitted
    /// loudly when no single convention covers all of them.
    std::string convention_report;
};

/// Sweeps n <= max_n over homotopy-equivalent non-homeomorphic pairs
/// (canonicalized to homeomorphism-class representatives, k < k'), computes
/// coproduct/cobracket counts for both members, and reports the smallest n
/// carrying a pair whose coproduct counts agree while the cobracket counts
/// differ, per convention. `threads` <= 0 reads LENSSTRING_THREADS, falling
/// back to the hardware concurrency. Output is deterministic regardless of
/// the evaluation order.
SearchResult search_smallest(int max_n,
                             Convention convention = Convention::generator_sum,
                             int threads = 0);

}  // namespace lensstring
