#include "lensstring/json_io.hpp"

#include <json.hpp>

namespace lensstring {

using nlohmann::json;

namespace {

json biform_json(const BiForm& b) {
    json terms = json::array();
    for (const auto& [ij, c] : b.terms())
        terms.push_back({{"i", ij.first}, {"j", ij.second}, {"c", c}});
    json out{{"n", b.n()}, {"terms", terms}};
    if (b.modulus() != b.n()) out["mod"] = b.modulus();
    return out;
}

json eq_json(const EqTensor& t) {
    json terms = json::array();
    for (const auto& [pq, c] : t.terms())
        terms.push_back({{"p", pq.first},
                         {"q", pq.second},
                         {"c", c},
                         {"mod", t.term_modulus(pq.first)}});
    return json{{"n", t.n()}, {"terms", terms}};
}

json alpha_json(const AlphaTensor& t) {
    json terms = json::array();
    for (const auto& [pq, c] : t.terms())
        terms.push_back({{"p", pq.first}, {"q", pq.second}, {"c", c}});
    return json{{"n", t.n()}, {"terms", terms}};
}

json count_json(const CountReport& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"pi_family_nonzero", r.pi_family_nonzero},
                {"k_family_nonzero", r.k_family_nonzero},
                {"generator_count", r.generator_count},
                {"component_union_count", r.component_union_count},
                {"convention", to_string(r.convention)},
                {"count", r.count()},
                {"m_sensitive", r.m_sensitive}};
}

}  // namespace

std::string to_json(const CyclicPoly& p) {
    json terms = json::array();
    for (int a = 0; a < p.n(); ++a)
        if (p.coeffs()[a] != 0) terms.push_back({{"exp", a}, {"coeff", p.coeffs()[a]}});
    return json{{"n", p.n()}, {"m", p.modulus()}, {"terms", terms}}.dump();
}

std::string to_json(const OneForm& w) {
    json terms = json::array();
    for (int a = 0; a < w.n(); ++a)
        if (w.coeffs()[a] != 0) terms.push_back({{"exp", a}, {"coeff", w.coeffs()[a]}});
    return json{{"n", w.n()}, {"m", w.modulus()}, {"terms", terms}}.dump();
}

std::string to_json(const BiForm& b) { return biform_json(b).dump(); }

std::string to_json(const EqTensor& t) { return eq_json(t).dump(); }

std::string to_json(const EqTensorPair& t) {
    return json{{"left", eq_json(t.left)}, {"swapped", eq_json(t.swapped)}}.dump();
}

std::string to_json(const AlphaTensor& t) { return alpha_json(t).dump(); }

std::string to_json(const CountReport& r) { return count_json(r).dump(); }

std::string to_json(const PairVerdict& v) {
    json out{{"n", v.n},
             {"k", v.k},
             {"k2", v.k2},
             {"homotopy_equivalent", v.homotopy_equivalent},
             {"homeomorphic", v.homeomorphic}};
    if (v.witness) out["witness"] = *v.witness;
    if (v.sign) out["sign"] = *v.sign;
    return out.dump();
}

std::string to_json(const TransformReport& r) {
    return json{{"l", r.l},
                {"lhs", eq_json(r.lhs)},
                {"pushed", eq_json(r.pushed)},
                {"correction", eq_json(r.correction)},
                {"rhs", eq_json(r.rhs)},
                {"discrepancy", eq_json(r.discrepancy)},
                {"equal", r.equal},
                {"discrepancy_in_k_span", r.discrepancy_in_k_span}}
        .dump();
}

std::string to_json(const BialgebraVerdict& v) {
    return json{{"lhs", alpha_json(v.lhs)},
                {"rhs", alpha_json(v.rhs)},
                {"compatible", v.compatible}}
        .dump();
}

std::string to_json(const SearchResult& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"k", row.k},
                        {"k2", row.k2},
                        {"witness", row.witness},
                        {"first", {{"coproduct", count_json(row.first.coproduct)},
                                   {"cobracket", count_json(row.first.cobracket)}}},
                        {"second", {{"coproduct", count_json(row.second.coproduct)},
                                    {"cobracket", count_json(row.second.cobracket)}}},
                        {"qualifies_generator_sum", row.qualifies_generator_sum},
                        {"qualifies_component_union", row.qualifies_component_union}});
    }
    json out{{"max_n", r.max_n},
             {"convention", to_string(r.convention)},
             {"rows", rows},
             {"convention_report", r.convention_report}};
    if (r.smallest_generator_sum) out["smallest_generator_sum"] = *r.smallest_generator_sum;
    if (r.smallest_component_union)
        out["smallest_component_union"] = *r.smallest_component_union;
    return out.dump();
}

BiForm biform_from_json(const std::string& text) {
    json j = json::parse(text);
    BiForm b(j.at("n").get<int>(),
             j.contains("mod") ? j.at("mod").get<i64>() : j.at("n").get<i64>());
    for (const auto& t : j.at("terms"))
        b.add_term(t.at("i").get<i64>(), t.at("j").get<i64>(), t.at("c").get<i64>());
    return b;
}

EqTensor eqtensor_from_json(const std::string& text) {
    json j = json::parse(text);
    EqTensor t(j.at("n").get<int>());
    for (const auto& term : j.at("terms"))
        t.add_term(term.at("p").get<i64>(), term.at("q").get<i64>(), term.at("c").get<i64>());
    return t;
}

}  // namespace lensstring
