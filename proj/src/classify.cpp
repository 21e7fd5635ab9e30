#include "lensstring/classify.hpp"

#include <algorithm>
#include <condition_variable>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "lensstring/zmod_solve.hpp"

namespace lensstring {

PairVerdict classify_pair(int n, int k, int k2) {
    if (n < 2) throw DomainError("n must be >= 2");
    auto canon = [n](int v) { int x = v % n; return x < 0 ? x + n : x; };
    k = canon(k);
    k2 = canon(k2);
    if (k == 0 || std::gcd(k, n) != 1 || k2 == 0 || std::gcd(k2, n) != 1)
        throw DomainError("k and k' must be coprime to n");
    PairVerdict v;
    v.n = n; v.k = k; v.k2 = k2;
    const i64 prod = static_cast<i64>(k) * k2 % n;
    for (int q = 0; q < n && !v.homotopy_equivalent; ++q) {
        const i64 sq = static_cast<i64>(q) * q % n;
        if (sq == prod) {
            v.homotopy_equivalent = true;
            v.witness = q;
            v.sign = 1;
        } else if ((sq + prod) % n == 0) {
            v.homotopy_equivalent = true;
            v.witness = q;
            v.sign = -1;
        }
    }
    const i64 kinv = mod_inverse(k, n);
    v.homeomorphic = (k2 == k) || (k2 == (n - k) % n) || (k2 == kinv % n) ||
                     (k2 == (n - kinv) % n);
    return v;
}

int homeo_class_rep(int n, int k) {
    const i64 kinv = mod_inverse(k, n);
    int c1 = ((k % n) + n) % n;
    int c2 = (n - c1) % n;
    int c3 = static_cast<int>(kinv);
    int c4 = (n - c3) % n;
    return std::min(std::min(c1, c2), std::min(c3, c4));
}

namespace {

int thread_budget(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LENSSTRING_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SearchCounts counts_for(const LensPair& space) {
    return SearchCounts{count_nonzero_coproduct(space), count_nonzero(space)};
}

std::vector<SearchRow> rows_for_order(int n) {
    std::vector<SearchRow> rows;
    std::vector<int> reps;
    for (int k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1 && homeo_class_rep(n, k) == k) reps.push_back(k);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            PairVerdict v = classify_pair(n, reps[i], reps[j]);
            if (!v.homotopy_equivalent || v.homeomorphic) continue;
            SearchRow row;
            row.n = n;
            row.k = reps[i];
            row.k2 = reps[j];
            row.witness = v.witness.value_or(0);
            row.first = counts_for(LensPair(n, reps[i]));
            row.second = counts_for(LensPair(n, reps[j]));
            const auto& a = row.first;
            const auto& b = row.second;
            row.qualifies_generator_sum =
                a.coproduct.generator_count == b.coproduct.generator_count &&
                a.cobracket.generator_count != b.cobracket.generator_count;
            row.qualifies_component_union =
                a.coproduct.component_union_count == b.coproduct.component_union_count &&
                a.cobracket.component_union_count != b.cobracket.component_union_count;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace

SearchResult search_smallest(int max_n, Convention convention, int threads) {
    if (max_n < 2) throw DomainError("max_n must be >= 2");
    SearchResult result;
    result.max_n = max_n;
    result.convention = convention;

    const int budget = thread_budget(threads);
    std::vector<std::vector<SearchRow>> per_n(static_cast<std::size_t>(max_n) + 1);
    std::mutex mu;
    int next_n = 2;
    auto worker = [&]() {
        for (;;) {
            int n;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next_n > max_n) return;
                n = next_n++;
            }
            auto rows = rows_for_order(n);
            std::lock_guard<std::mutex> lock(mu);
            per_n[static_cast<std::size_t>(n)] = std::move(rows);
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min(budget, max_n - 1);
    for (int i = 0; i < std::max(1, nthreads); ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (int n = 2; n <= max_n; ++n) {
        for (auto& row : per_n[static_cast<std::size_t>(n)]) {
            if (row.qualifies_generator_sum && !result.smallest_generator_sum)
                result.smallest_generator_sum = n;
            if (row.qualifies_component_union && !result.smallest_component_union)
                result.smallest_component_union = n;
            result.rows.push_back(std::move(row));
        }
    }

    std::ostringstream rep;
    rep << "convention report: headline counts follow the " << to_string(convention)
        << " convention.";
    if (result.smallest_generator_sum)
        rep << " generator-sum: smallest qualifying n = " << *result.smallest_generator_sum
            << ".";
    else
        rep << " generator-sum: no qualifying pair up to n = " << max_n << ".";
    if (result.smallest_component_union)
        rep << " component-union: smallest qualifying n = "
            << *result.smallest_component_union << ".";
    else
        rep << " component-union: no qualifying pair up to n = " << max_n << ".";
    result.convention_report = rep.str();
    return result;
}

}  // namespace lensstring
