// dfl: exact evaluation, level sets, commutativity classification, and
// rasterization for dilated floor functions f(x) = floor(a*x + g).
//
// Exit codes: 0 success, 1 contract violation (e.g. witness of a commuting
// pair, failed cross-check), 2 argument/parse errors.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfl/commute.hpp"
#include "dfl/dilated.hpp"
#include "dfl/levelset.hpp"
#include "dfl/raster.hpp"
#include "dfl/rat.hpp"
#include "dfl/selftest.hpp"
#include "dfl/sweep.hpp"

namespace {

using dfl::Int;
using dfl::Rat;
using json = nlohmann::json;

// Thrown for malformed rational/integer literals; mapped to exit code 2
// like any other argument error.
struct LiteralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& text) {
    if (auto r = Rat::parse(text)) {
        return *r;
    }
    throw LiteralError("invalid rational literal '" + text +
                       "' (expected e.g. \"-3/7\", \"2\", \"0\")");
}

Int parse_integer(const std::string& text) {
    if (auto r = Rat::parse(text); r && r->is_integer()) {
        return r->num();
    }
    throw LiteralError("invalid integer literal '" + text + "'");
}

json json_int(const Int& v) {
    constexpr auto lo = std::numeric_limits<long long>::min();
    constexpr auto hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) {
        return v.convert_to<long long>();
    }
    return v.str();
}

json json_witness(const dfl::Witness& w) {
    return {{"x", w.x.str()}, {"lhs", json_int(w.lhs)}, {"rhs", json_int(w.rhs)}};
}

std::string witness_text(const dfl::Witness& w) {
    return "x=" + w.x.str() + " lhs=" + w.lhs.str() + " rhs=" + w.rhs.str();
}

void emit(const json& j) {
    std::cout << j.dump() << '\n';
}

// Resolves the "positionals or --pair" convention shared by the pair-taking
// subcommands.
std::pair<Rat, Rat> resolve_pair(const std::vector<std::string>& positional,
                                 const std::vector<std::string>& pair_flag) {
    const auto& source = pair_flag.empty() ? positional : pair_flag;
    if (source.size() != 2) {
        throw LiteralError("expected exactly two rationals (positional or via --pair)");
    }
    return {parse_rat(source[0]), parse_rat(source[1])};
}

int cmd_eval(const std::vector<std::string>& factors, const std::string& at,
             bool as_json) {
    dfl::CompositionChain chain;
    for (const std::string& f : factors) {
        chain.push_back(parse_rat(f));
    }
    const Int value = dfl::eval_chain(chain, parse_rat(at));
    if (as_json) {
        emit({{"value", json_int(value)}});
    } else {
        std::cout << value.str() << '\n';
    }
    return 0;
}

int cmd_levelset(const Rat& s, const Rat& t, const Int& level, bool as_json) {
    const dfl::HalfLine set = dfl::upper_level_set(s, t, level);
    if (!as_json) {
        std::cout << set.str() << '\n';
        return 0;
    }
    json j{{"set", set.str()}};
    switch (set.kind()) {
        case dfl::HalfLine::Kind::UpwardRay:
            j["kind"] = "UpwardRay";
            break;
        case dfl::HalfLine::Kind::DownwardRay:
            j["kind"] = "DownwardRay";
            break;
        case dfl::HalfLine::Kind::Everything:
            j["kind"] = "Everything";
            break;
        case dfl::HalfLine::Kind::Empty:
            j["kind"] = "Empty";
            break;
    }
    if (set.is_ray()) {
        j["endpoint"] = set.endpoint().str();
        j["closed"] = set.closed();
    }
    emit(j);
    return 0;
}

int cmd_classify(const Rat& s, const Rat& t, bool as_json) {
    const dfl::Verdict v = dfl::classify(s, t);
    std::optional<dfl::Witness> witness;
    if (!v.commutes) {
        witness = dfl::find_witness(s, t);
    }
    if (as_json) {
        json j{{"commutes", v.commutes},
               {"case", std::string(dfl::family_case_name(v.family))}};
        if (v.family == dfl::FamilyCase::UnitFractions) {
            j["m"] = json_int(*v.m);
            j["n"] = json_int(*v.n);
        }
        if (witness) {
            j["witness"] = json_witness(*witness);
        }
        emit(j);
        return 0;
    }
    std::cout << "commutes: " << (v.commutes ? "yes" : "no") << '\n';
    std::cout << "case: " << dfl::family_case_name(v.family);
    if (v.family == dfl::FamilyCase::UnitFractions) {
        std::cout << " m=" << v.m->str() << " n=" << v.n->str();
    }
    std::cout << '\n';
    if (witness) {
        std::cout << "witness: " << witness_text(*witness) << '\n';
    }
    return 0;
}

int cmd_witness(const Rat& s, const Rat& t, bool as_json) {
    const dfl::Witness w = dfl::find_witness(s, t);
    if (as_json) {
        emit(json_witness(w));
    } else {
        std::cout << witness_text(w) << '\n';
    }
    return 0;
}

int cmd_oracle(const Rat& s, const Rat& t, const std::string& lo,
               const std::string& hi, const std::string& den,
               const std::vector<std::string>& affine, bool as_json) {
    const Rat range_lo = parse_rat(lo);
    const Rat range_hi = parse_rat(hi);
    const Int d = den.empty() ? Int(dfl::kSweepDenFactor) * s.den() * t.den()
                              : parse_integer(den);
    dfl::OracleResult result;
    if (affine.empty()) {
        result = dfl::brute_force_commute(s, t, range_lo, range_hi, d);
    } else {
        result = dfl::affine_commute_oracle(s, parse_rat(affine[0]), t,
                                            parse_rat(affine[1]), range_lo,
                                            range_hi, d);
    }
    if (as_json) {
        json j{{"no_counterexample", result.no_counterexample}};
        if (result.witness) {
            j["witness"] = json_witness(*result.witness);
        }
        emit(j);
        return 0;
    }
    if (result.no_counterexample) {
        std::cout << "no counterexample\n";
    } else {
        std::cout << "counterexample: " << witness_text(*result.witness) << '\n';
    }
    return 0;
}

int cmd_raster(const Rat& alpha, const Rat& gamma, const Int& n_min,
               const Int& n_max, const std::string& format,
               const std::string& output, bool as_json) {
    const dfl::DigitalLine line = dfl::rasterize(alpha, gamma, n_min, n_max);
    std::string bytes;
    if (as_json) {
        json pixels = json::array();
        for (const dfl::Pixel& p : line.pixels) {
            pixels.push_back({json_int(p.n), json_int(p.y)});
        }
        bytes = json{{"alpha", alpha.str()}, {"gamma", gamma.str()}, {"pixels", pixels}}
                    .dump() +
                '\n';
    } else {
        dfl::ImageFormat f = dfl::ImageFormat::Ascii;
        if (format == "pgm") {
            f = dfl::ImageFormat::Pgm;
        } else if (format == "svg") {
            f = dfl::ImageFormat::Svg;
        } else if (format != "ascii") {
            throw LiteralError("unknown format '" + format + "'");
        }
        bytes = dfl::render(line, f);
    }
    if (output.empty()) {
        std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << output << "'\n";
            return 1;
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
    return 0;
}

int cmd_sweep(const Int& max_num, const Int& max_den, unsigned threads,
              bool as_json) {
    const dfl::SweepReport report = dfl::run_sweep(max_num, max_den, threads);
    const bool ok = report.families_exact && report.mismatch_count == 0;

    if (as_json) {
        json commuting = json::array();
        json mismatches = json::array();
        for (const dfl::PairOutcome& p : report.pairs) {
            if (p.verdict.commutes) {
                commuting.push_back({p.s.str(), p.t.str()});
            }
            if (!p.agrees()) {
                json m{{"s", p.s.str()},
                       {"t", p.t.str()},
                       {"case", std::string(dfl::family_case_name(p.verdict.family))}};
                m["witness"] =
                    p.verified_witness ? json_witness(*p.verified_witness) : json();
                mismatches.push_back(m);
            }
        }
        emit({{"values", report.values.size()},
              {"pairs", report.pairs.size()},
              {"commuting", report.commuting_count},
              {"commuting_pairs", commuting},
              {"mismatches", report.mismatch_count},
              {"mismatch_pairs", mismatches},
              {"families_exact", report.families_exact},
              {"ok", ok}});
        return ok ? 0 : 1;
    }

    std::cout << "values: " << report.values.size() << '\n';
    std::cout << "pairs: " << report.pairs.size() << '\n';
    std::cout << "commuting: " << report.commuting_count << '\n';
    std::cout << "commuting pairs:\n";
    for (const dfl::PairOutcome& p : report.pairs) {
        if (p.verdict.commutes) {
            std::cout << "  (" << p.s.str() << ", " << p.t.str() << ")\n";
        }
    }
    std::cout << "cross-check mismatches: " << report.mismatch_count << '\n';
    for (const dfl::PairOutcome& p : report.pairs) {
        if (p.agrees()) {
            continue;
        }
        std::cout << "  (" << p.s.str() << ", " << p.t.str() << "): classified "
                  << dfl::family_case_name(p.verdict.family);
        if (p.oracle_clear) {
            std::cout << "; oracle window [" << dfl::kSweepLo << ", " << dfl::kSweepHi
                      << "] x k/" << (Int(dfl::kSweepDenFactor) * p.s.den() * p.t.den()).str()
                      << " found no counterexample";
            if (p.verified_witness) {
                std::cout << "; verified witness outside window: "
                          << witness_text(*p.verified_witness);
            }
        } else if (p.oracle_witness) {
            std::cout << "; oracle counterexample: " << witness_text(*p.oracle_witness);
        }
        std::cout << '\n';
    }
    std::cout << "families check: " << (report.families_exact ? "PASS" : "FAIL")
              << " (commuting set vs {s=t} + {s=0} + {t=0} + {1/m, 1/n})\n";
    std::cout << "cross-check: "
              << (report.mismatch_count == 0 ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

int cmd_selftest(bool as_json) {
    if (!as_json) {
        return dfl::selftest::run_all(std::cout) ? 0 : 1;
    }
    std::ostringstream log;
    const bool ok = dfl::selftest::run_all(log);
    json suites = json::array();
    std::istringstream lines(log.str());
    std::string line;
    while (std::getline(lines, line)) {
        const bool suite_ok = line.rfind("ok", 0) == 0;
        suites.push_back({{"name", line.substr(5)}, {"ok", suite_ok}});
    }
    emit({{"suites", suites}, {"ok", ok}});
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "dilated floor function toolkit: exact evaluation, upper level sets,\n"
        "commutativity classification with verified counterexamples, and\n"
        "digital straight line rasterization.\n"
        "\n"
        "Rationals use the literal grammar \"-3/7\", \"2\", \"0\". Negative\n"
        "values may be passed positionally after \"--\" or via --pair."};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on stdout")->configurable(false);

    // eval
    auto* eval = app.add_subcommand(
        "eval", "evaluate a composition chain floor(a1*floor(a2*...*floor(ak*x)))");
    std::vector<std::string> eval_factors;
    std::string eval_at;
    eval->add_option("factors", eval_factors, "dilation factors, outermost first")
        ->required();
    eval->add_option("--at", eval_at, "evaluation point x")->required();
    eval->add_flag("--json", as_json, "emit JSON");

    // levelset
    auto* levelset = app.add_subcommand(
        "levelset", "upper level set {x : floor(s*floor(t*x)) >= n}");
    std::vector<std::string> ls_pos;
    std::vector<std::string> ls_pair;
    std::string ls_level;
    levelset->add_option("st", ls_pos, "outer factor s, inner factor t")
        ->expected(2);
    levelset->add_option("--pair", ls_pair, "outer factor s, inner factor t")
        ->expected(2);
    levelset->add_option("--level", ls_level, "integer level n")->required();
    levelset->add_flag("--json", as_json, "emit JSON");

    // classify
    auto* classify = app.add_subcommand(
        "classify",
        "decide whether floor(s*floor(t*x)) == floor(t*floor(s*x)) for all x");
    std::vector<std::string> cl_pos;
    std::vector<std::string> cl_pair;
    classify->add_option("st", cl_pos, "dilation factors s, t")->expected(2);
    classify->add_option("--pair", cl_pair, "dilation factors s, t")->expected(2);
    classify->add_flag("--json", as_json, "emit JSON");

    // witness
    auto* witness = app.add_subcommand(
        "witness", "verified counterexample for a non-commuting pair");
    std::vector<std::string> wi_pos;
    std::vector<std::string> wi_pair;
    witness->add_option("st", wi_pos, "dilation factors s, t")->expected(2);
    witness->add_option("--pair", wi_pair, "dilation factors s, t")->expected(2);
    witness->add_flag("--json", as_json, "emit JSON");

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle",
        "brute-force commutation sweep over x = k/D in [lo, hi]; a sound\n"
        "refuter, not a prover. Default D = 12*den(s)*den(t), the same window\n"
        "the sweep cross-check uses.");
    std::vector<std::string> or_pos;
    std::vector<std::string> or_pair;
    std::string or_lo = "-10";
    std::string or_hi = "10";
    std::string or_den;
    std::vector<std::string> or_affine;
    oracle->add_option("st", or_pos, "dilation factors s, t")->expected(2);
    oracle->add_option("--pair", or_pair, "dilation factors s, t")->expected(2);
    oracle->add_option("--lo", or_lo, "sweep range lower end (default -10)");
    oracle->add_option("--hi", or_hi, "sweep range upper end (default 10)");
    oracle->add_option("--den", or_den, "sample denominator D (default 12*den(s)*den(t))");
    oracle->add_option("--affine", or_affine,
                       "offsets g1 g2: compare floor(s*x + g1) and floor(t*x + g2) "
                       "compositions instead")
        ->expected(2);
    oracle->add_flag("--json", as_json, "emit JSON");

    // raster
    auto* raster = app.add_subcommand(
        "raster", "digital straight line pixels (n, floor(alpha*n + gamma))");
    std::string ra_alpha;
    std::string ra_gamma;
    std::vector<std::string> ra_range;
    std::string ra_format = "ascii";
    std::string ra_output;
    raster->add_option("alpha", ra_alpha, "slope")->required();
    raster->add_option("gamma", ra_gamma, "offset")->required();
    raster->add_option("--range", ra_range, "abscissa range: n_min n_max")
        ->expected(2)
        ->required();
    raster->add_option("--format", ra_format,
                       "ascii | pgm | svg (rows print from the largest ordinate "
                       "at the top)");
    raster->add_option("-o,--output", ra_output, "write to file instead of stdout");
    raster->add_flag("--json", as_json, "emit pixel list as JSON");

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep",
        "classify all ordered pairs of reduced rationals with |num| <= max-num,\n"
        "den <= max-den (zero included) and cross-check each verdict against\n"
        "the brute-force oracle over [-10, 10] with D = 12*den(s)*den(t)");
    std::string sw_max_num;
    std::string sw_max_den;
    unsigned sw_threads = 0;
    sweep->add_option("--max-num", sw_max_num, "numerator bound (>= 1)")->required();
    sweep->add_option("--max-den", sw_max_den, "denominator bound (>= 1)")->required();
    sweep->add_option("--threads", sw_threads,
                      "worker threads (0 = hardware concurrency); output order "
                      "is deterministic either way");
    sweep->add_flag("--json", as_json, "emit JSON");

    // selftest
    auto* selftest =
        app.add_subcommand("selftest", "run every module's invariant suite");
    selftest->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval)) {
            return cmd_eval(eval_factors, eval_at, as_json);
        }
        if (app.got_subcommand(levelset)) {
            auto [s, t] = resolve_pair(ls_pos, ls_pair);
            return cmd_levelset(s, t, parse_integer(ls_level), as_json);
        }
        if (app.got_subcommand(classify)) {
            auto [s, t] = resolve_pair(cl_pos, cl_pair);
            return cmd_classify(s, t, as_json);
        }
        if (app.got_subcommand(witness)) {
            auto [s, t] = resolve_pair(wi_pos, wi_pair);
            return cmd_witness(s, t, as_json);
        }
        if (app.got_subcommand(oracle)) {
            auto [s, t] = resolve_pair(or_pos, or_pair);
            return cmd_oracle(s, t, or_lo, or_hi, or_den, or_affine, as_json);
        }
        if (app.got_subcommand(raster)) {
            return cmd_raster(parse_rat(ra_alpha), parse_rat(ra_gamma),
                              parse_integer(ra_range[0]), parse_integer(ra_range[1]),
                              ra_format, ra_output, as_json);
        }
        if (app.got_subcommand(sweep)) {
            return cmd_sweep(parse_integer(sw_max_num), parse_integer(sw_max_den),
                             sw_threads, as_json);
        }
        if (app.got_subcommand(selftest)) {
            return cmd_selftest(as_json);
        }
    } catch (const LiteralError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable: require_subcommand(1)
}
