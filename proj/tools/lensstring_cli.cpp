// Command-line front end: string coproduct/cobracket values on lens spaces,
// nonzero-component counts, the torsion correction pipeline, and the search
// over homotopy-equivalent non-homeomorphic pairs.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical domain error,
// 3 check failed (inverted by --expect-fail where offered).

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lensstring/bialgebra.hpp"
#include "lensstring/classify.hpp"
#include "lensstring/json_io.hpp"
#include "lensstring/torsion.hpp"

using namespace lensstring;

namespace {

enum class Format { text, csv, json };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw CLI::ValidationError("--format must be text, csv or json");
}

Convention parse_convention(const std::string& s) {
    if (s == "generator-sum") return Convention::generator_sum;
    if (s == "component-union") return Convention::component_union;
    throw CLI::ValidationError("--convention must be generator-sum or component-union");
}

struct CommonFlags {
    std::string format = "text";
    bool unicode = false;
    Render render() const { return unicode ? Render::unicode : Render::ascii; }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format: text|csv|json");
    cmd->add_flag("--unicode", flags.unicode, "Render tensors with Greek letters");
    cmd->add_flag("--ascii", [&flags](std::int64_t) { flags.unicode = false; },
                  "Force ASCII rendering (default)");
}

int run_coproduct(int n, int k, int l, std::int64_t m, const CommonFlags& flags) {
    LensPair space(n, k);
    BiForm b = coproduct_rho(space, RhoClass{l, m});
    switch (parse_format(flags.format)) {
        case Format::json: std::cout << to_json(b) << "\n"; break;
        case Format::csv:
            std::cout << "i,j,c\n";
            for (const auto& [ij, c] : b.terms())
                std::cout << ij.first << "," << ij.second << "," << c << "\n";
            break;
        case Format::text: std::cout << b.str() << "\n"; break;
    }
    return 0;
}

int run_tables(int n, int k, const std::string& which, const CommonFlags& flags) {
    LensPair space(n, k);
    std::vector<std::pair<int, std::string>> rows;
    std::vector<std::string> json_rows;
    for (int l = 1; l < n; ++l) {
        std::string cell, jcell;
        if (which == "coproduct") {
            BiForm b = coproduct_rho(space, RhoClass{l, 0});
            cell = b.str();
            jcell = to_json(b);
        } else if (which == "cobracket-pi") {
            EqTensorPair t = cobracket_pi_y(space, l);
            cell = t.left.str(flags.render());
            jcell = to_json(t);
        } else if (which == "cobracket-k") {
            EqTensorPair t = cobracket_k_family(space, l);
            cell = t.left.str(flags.render());
            jcell = to_json(t);
        } else {
            throw CLI::ValidationError("--which must be coproduct, cobracket-pi or cobracket-k");
        }
        rows.emplace_back(l, cell);
        json_rows.push_back(jcell);
    }
    switch (parse_format(flags.format)) {
        case Format::json: {
            std::ostringstream os;
            os << "{\"n\":" << n << ",\"k\":" << k << ",\"which\":\"" << which
               << "\",\"rows\":[";
            for (std::size_t i = 0; i < json_rows.size(); ++i)
                os << (i ? "," : "") << "{\"l\":" << rows[i].first << ",\"value\":"
                   << json_rows[i] << "}";
            os << "]}";
            std::cout << os.str() << "\n";
            break;
        }
        case Format::csv:
            std::cout << "l,value\n";
            for (const auto& [l, cell] : rows) std::cout << l << "," << cell << "\n";
            break;
        case Format::text:
            for (const auto& [l, cell] : rows) std::cout << l << ": " << cell << "\n";
            break;
    }
    return 0;
}

int run_counts(int n, int k, const std::string& convention, const CommonFlags& flags) {
    LensPair space(n, k);
    CountReport rep = count_nonzero(space, parse_convention(convention));
    switch (parse_format(flags.format)) {
        case Format::json: std::cout << to_json(rep) << "\n"; break;
        case Format::csv: {
            std::cout << "n,k,convention,count,generator_count,component_union_count\n"
                      << n << "," << k << "," << to_string(rep.convention) << ","
                      << rep.count() << "," << rep.generator_count << ","
                      << rep.component_union_count << "\n";
            break;
        }
        case Format::text: std::cout << rep.count() << "\n"; break;
    }
    return 0;
}

int run_search(int max_n, const std::string& convention, const CommonFlags& flags) {
    SearchResult res = search_smallest(max_n, parse_convention(convention));
    switch (parse_format(flags.format)) {
        case Format::json: std::cout << to_json(res) << "\n"; break;
        case Format::csv:
            std::cout << "n,k,k2,copr_first,copr_second,cobr_first,cobr_second,"
                         "qualifies_generator_sum,qualifies_component_union\n";
            for (const auto& row : res.rows)
                std::cout << row.n << "," << row.k << "," << row.k2 << ","
                          << row.first.coproduct.count() << ","
                          << row.second.coproduct.count() << ","
                          << row.first.cobracket.count() << ","
                          << row.second.cobracket.count() << ","
                          << row.qualifies_generator_sum << ","
                          << row.qualifies_component_union << "\n";
            break;
        case Format::text: {
            for (const auto& row : res.rows) {
                std::cout << "n=" << row.n << " pair (" << row.k << "," << row.k2
                          << "): coproduct counts (" << row.first.coproduct.count() << ","
                          << row.second.coproduct.count() << "), cobracket counts ("
                          << row.first.cobracket.count() << ","
                          << row.second.cobracket.count() << ")"
                          << (row.qualifies_generator_sum ? " [qualifies: generator-sum]" : "")
                          << (row.qualifies_component_union ? " [qualifies: component-union]"
                                                            : "")
                          << "\n";
            }
            if (res.smallest_generator_sum)
                std::cout << "smallest (generator-sum): " << *res.smallest_generator_sum
                          << "\n";
            if (res.smallest_component_union)
                std::cout << "smallest (component-union): " << *res.smallest_component_union
                          << "\n";
            std::cout << res.convention_report << "\n";
            break;
        }
    }
    return 0;
}

int run_torsion(int n, int k, int k2, int s, const std::string& expression,
                const CommonFlags& flags) {
    LensMap f(LensPair(n, k), LensPair(n, k2), s, expression);
    TorsionUnit unit = torsion_unit(f);
    OneForm dlog = dennis_dlog(unit.unit);
    CyclicPoly inverse = invert_unit(unit.unit);
    if (parse_format(flags.format) == Format::json) {
        std::cout << "{\"unit\":" << to_json(unit.unit_integral)
                  << ",\"unit_mod\":" << to_json(unit.unit)
                  << ",\"inverse\":" << to_json(inverse) << ",\"dlog\":" << to_json(dlog)
                  << "}\n";
    } else {
        std::cout << "tau      = " << unit.unit_integral.str() << "\n"
                  << "tau^-1   = " << inverse.str() << "  (mod " << unit.unit.modulus()
                  << ")\n"
                  << "dlog tau = " << dlog.str(OneForm::Basis::dt) << "  (mod "
                  << dlog.modulus() << ")\n"
                  << "         = " << dlog.str() << "\n";
    }
    return 0;
}

int run_transform_check(int n, int k, int k2, int s, const std::string& expression,
                        int l, bool all, const CommonFlags& flags) {
    LensMap f(LensPair(n, k), LensPair(n, k2), s, expression);
    std::vector<int> ls;
    if (all)
        for (int i = 1; i < n; ++i) ls.push_back(i);
    else
        ls.push_back(l);
    bool ok = true;
    bool first = true;
    if (parse_format(flags.format) == Format::json) std::cout << "[";
    for (int li : ls) {
        TransformReport rep = transform_check(f, li);
        ok = ok && rep.equal;
        if (parse_format(flags.format) == Format::json) {
            std::cout << (first ? "" : ",") << to_json(rep);
        } else {
            std::cout << "l=" << li << ": " << (rep.equal ? "ok" : "MISMATCH")
                      << "  lhs=" << rep.lhs.str(flags.render())
                      << "  rhs=" << rep.rhs.str(flags.render());
            if (!rep.equal)
                std::cout << "  discrepancy=" << rep.discrepancy.str(flags.render())
                          << (rep.discrepancy_in_k_span
                                  ? " (inside the kernel-family ambiguity)"
                                  : " (outside the kernel-family ambiguity)");
            std::cout << "\n";
        }
        first = false;
    }
    if (parse_format(flags.format) == Format::json) std::cout << "]\n";
    return ok ? 0 : 3;
}

int run_bialgebra(int n, int k, int x, int y, bool expect_fail, const CommonFlags& flags) {
    LensPair space(n, k);
    BialgebraVerdict v =
        bialgebra_check(space, EqClass::pi_y(x, n), EqClass::pi_y(y, n));
    if (parse_format(flags.format) == Format::json) {
        std::cout << to_json(v) << "\n";
    } else {
        std::cout << (v.compatible ? "compatible" : "incompatible")
                  << "  lhs=" << v.lhs.str(flags.render())
                  << "  rhs=" << v.rhs.str(flags.render()) << "\n";
    }
    int code = v.compatible ? 0 : 3;
    if (expect_fail) code = code == 3 ? 0 : 3;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"String coproduct/cobracket calculator for 3-dimensional lens spaces"};
    app.require_subcommand(1);

    // coproduct
    auto* c_cop = app.add_subcommand("coproduct", "Coproduct value of one component class");
    int cop_n = 9, cop_k = 1, cop_l = 1;
    std::int64_t cop_m = 0;
    CommonFlags cop_flags;
    c_cop->add_option("--n", cop_n, "Fundamental-group order")->required();
    c_cop->add_option("--k", cop_k, "Lens parameter k")->required();
    c_cop->add_option("--l", cop_l, "Component index")->required();
    c_cop->add_option("--m", cop_m, "Winding parameter (default 0)");
    add_common(c_cop, cop_flags);

    // tables
    auto* c_tab = app.add_subcommand("tables", "Full value table over l = 1..n-1");
    int tab_n = 9, tab_k = 1;
    std::string tab_which = "coproduct";
    CommonFlags tab_flags;
    c_tab->add_option("--n", tab_n)->required();
    c_tab->add_option("--k", tab_k)->required();
    c_tab->add_option("--which", tab_which, "coproduct|cobracket-pi|cobracket-k")->required();
    add_common(c_tab, tab_flags);

    // counts
    auto* c_cnt = app.add_subcommand("counts", "Nonzero-component count of the cobracket");
    int cnt_n = 9, cnt_k = 1;
    std::string cnt_conv = "generator-sum";
    CommonFlags cnt_flags;
    c_cnt->add_option("--n", cnt_n)->required();
    c_cnt->add_option("--k", cnt_k)->required();
    c_cnt->add_option("--convention", cnt_conv, "generator-sum|component-union");
    add_common(c_cnt, cnt_flags);

    // search
    auto* c_sea = app.add_subcommand(
        "search", "Sweep homotopy-equivalent non-homeomorphic pairs up to max-n");
    int sea_max = 24;
    std::string sea_conv = "generator-sum";
    CommonFlags sea_flags;
    c_sea->add_option("--max-n", sea_max)->required();
    c_sea->add_option("--convention", sea_conv, "generator-sum|component-union");
    add_common(c_sea, sea_flags);

    // torsion
    auto* c_tor = app.add_subcommand("torsion", "Torsion unit, inverse and Dennis trace");
    int tor_n = 9, tor_k = 1, tor_k2 = 4, tor_s = 2;
    std::string tor_expr = "(t^7-1)(t^1-1)/((t^1-1)(t^1-1))";
    CommonFlags tor_flags;
    c_tor->add_option("--n", tor_n)->required();
    c_tor->add_option("--k", tor_k, "Source lens parameter")->required();
    c_tor->add_option("--k2", tor_k2, "Target lens parameter")->required();
    c_tor->add_option("--s", tor_s, "Component multiplier")->required();
    c_tor->add_option("--expression", tor_expr, "Torsion unit as a binomial quotient");
    add_common(c_tor, tor_flags);

    // transform-check
    auto* c_tra = app.add_subcommand("transform-check",
                                     "Cobracket transformation-formula verification");
    int tra_n = 9, tra_k = 1, tra_k2 = 4, tra_s = 2, tra_l = 1;
    bool tra_all = false;
    std::string tra_expr = "(t^7-1)(t^1-1)/((t^1-1)(t^1-1))";
    CommonFlags tra_flags;
    c_tra->add_option("--n", tra_n)->required();
    c_tra->add_option("--k", tra_k)->required();
    c_tra->add_option("--k2", tra_k2)->required();
    c_tra->add_option("--s", tra_s)->required();
    c_tra->add_option("--expression", tra_expr);
    c_tra->add_option("--l", tra_l, "Single component to check");
    c_tra->add_flag("--all", tra_all, "Check every component");
    add_common(c_tra, tra_flags);

    // bialgebra-check
    auto* c_bia = app.add_subcommand("bialgebra-check",
                                     "Drinfeld compatibility of bracket and cobracket");
    int bia_n = 9, bia_k = 4, bia_x = 1, bia_y = 8;
    bool bia_expect_fail = false;
    CommonFlags bia_flags;
    c_bia->add_option("--n", bia_n)->required();
    c_bia->add_option("--k", bia_k)->required();
    c_bia->add_option("--x", bia_x, "Component of X = pi_* y_x")->required();
    c_bia->add_option("--y", bia_y, "Component of Y = pi_* y_y")->required();
    c_bia->add_flag("--expect-fail", bia_expect_fail,
                    "Invert the check exit code (incompatibility expected)");
    add_common(c_bia, bia_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (c_cop->parsed()) return run_coproduct(cop_n, cop_k, cop_l, cop_m, cop_flags);
        if (c_tab->parsed()) return run_tables(tab_n, tab_k, tab_which, tab_flags);
        if (c_cnt->parsed()) return run_counts(cnt_n, cnt_k, cnt_conv, cnt_flags);
        if (c_sea->parsed()) return run_search(sea_max, sea_conv, sea_flags);
        if (c_tor->parsed())
            return run_torsion(tor_n, tor_k, tor_k2, tor_s, tor_expr, tor_flags);
        if (c_tra->parsed())
            return run_transform_check(tra_n, tra_k, tra_k2, tra_s, tra_expr, tra_l, tra_all,
                                       tra_flags);
        if (c_bia->parsed())
            return run_bialgebra(bia_n, bia_k, bia_x, bia_y, bia_expect_fail, bia_flags);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
