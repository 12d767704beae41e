// gpforge command line: generation, verification, search, audit, and the
// numeric example, all with exact rational JSON output.
//
// Exit codes: 0 success, 1 internal verification failure, 2 usage error.

#include <gpforge/conformance.hpp>
#include <gpforge/family.hpp>
#include <gpforge/json_io.hpp>
#include <gpforge/search.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using gpforge::json;
using gpforge::Rational;

constexpr const char* kSchema = "gpforge/1";

class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

Rational parse_rational(const std::string& s) {
    try {
        return Rational::from_string(s);
    } catch (const std::exception&) {
        throw usage_error("cannot parse rational '" + s + "' (expected num/den or integer)");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

void require_nondegenerate_ratio(const Rational& T) {
    if (T.is_zero() || T == Rational(1) || T == Rational(-1))
        throw usage_error("degenerate ratio: T must avoid {0, 1, -1}");
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(1) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw usage_error("cannot open output file '" + out_path + "'");
        f << text;
    }
}

gpforge::GeneralCurve parse_curve_spec(const std::string& curve, const std::string& poly) {
    if (!curve.empty() && !poly.empty())
        throw usage_error("--curve and --poly are mutually exclusive");
    if (!curve.empty()) {
        auto parts = split(curve, ',');
        if (parts.size() != 3) throw usage_error("--curve expects 'a,b,n'");
        Rational a = parse_rational(parts[0]);
        Rational b = parse_rational(parts[1]);
        int n = 0;
        try {
            n = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw usage_error("--curve expects integer n");
        }
        if (n < 1) throw usage_error("--curve expects n >= 1");
        return gpforge::trinomial_as_general(gpforge::TrinomialCurve{n, a, b});
    }
    if (!poly.empty()) {
        std::vector<Rational> coeffs;
        for (const auto& part : split(poly, ',')) coeffs.push_back(parse_rational(part));
        try {
            return gpforge::GeneralCurve(std::move(coeffs));
        } catch (const std::exception& ex) {
            throw usage_error(ex.what());
        }
    }
    throw usage_error("a curve is required: --curve a,b,n or --poly c0,c1,...,cd");
}

int cmd_generate(const std::string& Tstr, int n, const std::string& mlist, long cap,
                 const std::string& out_path) {
    Rational T = parse_rational(Tstr);
    require_nondegenerate_ratio(T);
    if (n < 2) throw usage_error("n must be >= 2");
    std::vector<long> ms;
    for (const auto& part : split(mlist, ',')) {
        long m = 0;
        try {
            m = std::stol(part);
        } catch (const std::exception&) {
            throw usage_error("cannot parse multiple '" + part + "'");
        }
        if (m == 0) throw usage_error("multiples must be nonzero");
        if (m > cap || m < -cap)
            throw usage_error("|m| exceeds the cap (" + std::to_string(cap) +
                              "); raise --cap to allow");
        ms.push_back(m);
    }
    if (ms.empty()) throw usage_error("at least one multiple is required");

    json records = json::array();
    for (long m : ms) {
        try {
            gpforge::FamilyRecord rec = gpforge::gp8_family(T, n, m);
            if (!gpforge::verify_record(rec)) {
                std::cerr << "verification failed for m=" << m << "\n";
                return 1;
            }
            records.push_back(rec);
        } catch (const gpforge::degenerate_member_error& ex) {
            std::cerr << "skipping m=" << m << ": " << ex.what() << "\n";
        } catch (const gpforge::exceptional_multiple_error& ex) {
            std::cerr << "skipping m=" << m << ": " << ex.what() << "\n";
        }
    }
    emit(json{{"schema", kSchema}, {"command", "generate"}, {"records", records}}, out_path);
    return 0;
}

int cmd_example(bool integer_model, const std::string& out_path) {
    gpforge::FamilyRecord rec = gpforge::closed_form_family(Rational(2), 2);
    if (!gpforge::verify_record(rec)) {
        std::cerr << "example verification failed\n";
        return 1;
    }
    json j{{"schema", kSchema}, {"command", "example"}};
    if (!integer_model) {
        j["curve"] = rec.curve;
        j["points"] = rec.sequence.points;
    } else {
        // clear denominators by the square of their lcm: y -> d*y stays exact
        mpz_class d;
        mpz_lcm(d.get_mpz_t(), rec.curve.a.den().get_mpz_t(), rec.curve.b.den().get_mpz_t());
        Rational scale{d};
        gpforge::TrinomialCurve cleared{rec.curve.n, scale * scale * rec.curve.a,
                                        scale * scale * rec.curve.b};
        std::vector<gpforge::CurvePoint> pts;
        for (const auto& pt : rec.sequence.points) {
            gpforge::CurvePoint q{pt.x, scale * pt.y};
            if (q.y * q.y != cleared.rhs(q.x)) {
                std::cerr << "integer-model verification failed\n";
                return 1;
            }
            pts.push_back(std::move(q));
        }
        j["curve"] = cleared;
        j["points"] = pts;
        j["scale"] = scale;
    }
    emit(j, out_path);
    return 0;
}

int cmd_verify(const std::string& curve, const std::string& poly, const std::string& pstr,
               const std::string& ratio, const std::string& range, const std::string& out_path) {
    gpforge::GeneralCurve C = parse_curve_spec(curve, poly);
    Rational p = parse_rational(pstr);
    Rational tau = parse_rational(ratio);
    auto bounds = split(range, '.');
    long lo = 0, hi = 0;
    // "lo..hi" splits into {lo, "", hi}
    if (bounds.size() == 3 && bounds[1].empty()) {
        try {
            lo = std::stol(bounds[0]);
            hi = std::stol(bounds[2]);
        } catch (const std::exception&) {
            throw usage_error("--range expects 'lo..hi'");
        }
    } else {
        throw usage_error("--range expects 'lo..hi'");
    }
    if (lo > hi) throw usage_error("--range expects lo <= hi");
    std::vector<gpforge::GPHit> hits;
    try {
        hits = gpforge::gp_verify(C, p, tau, lo, hi);
    } catch (const std::invalid_argument& ex) {
        throw usage_error(ex.what());
    }
    emit(json{{"schema", kSchema},
              {"command", "verify"},
              {"hits", hits},
              {"count", hits.size()}},
         out_path);
    return 0;
}

int cmd_search(const std::string& curve, const std::string& poly, unsigned height, int min_len,
               const std::string& out_path) {
    gpforge::GeneralCurve C = parse_curve_spec(curve, poly);
    if (min_len < 3) throw usage_error("--min-len must be >= 3");
    if (height < 1) throw usage_error("--height must be >= 1");
    bool capped = false;
    auto sequences = gpforge::gp_search(C, gpforge::HeightBound(height), min_len, &capped);
    if (capped) std::cerr << "warning: a run hit the extension cap; review manually\n";
    std::cerr << "searched height <= " << height << ": " << sequences.size()
              << " sequence(s) of length >= " << min_len << "\n";
    emit(json{{"schema", kSchema},
              {"command", "search"},
              {"sequences", sequences},
              {"count", sequences.size()},
              {"cap_hit", capped}},
         out_path);
    return 0;
}

int cmd_audit(const std::string& tlist, uint64_t seed, bool strict, const std::string& out_path) {
    std::vector<Rational> ts;
    for (const auto& part : split(tlist, ',')) {
        Rational t = parse_rational(part);
        require_nondegenerate_ratio(t);
        ts.push_back(t);
    }
    if (ts.empty()) throw usage_error("at least one ratio sample is required");
    gpforge::ConformanceReport report = gpforge::audit(ts, seed);
    // human-readable table on stderr
    std::fprintf(stderr, "%-16s %-14s %s\n", "FORMULA", "STATUS", "WITNESS");
    for (const auto& e : report.entries) {
        std::string w;
        for (const auto& item : e.witness) {
            if (!w.empty()) w += "  ";
            w += item;
        }
        std::fprintf(stderr, "%-16s %-14s %s\n", e.id.c_str(), gpforge::to_string(e.status),
                     w.c_str());
    }
    emit(json{{"schema", kSchema}, {"command", "audit"}, {"seed", seed}, {"report", report}},
         out_path);
    if (strict)
        for (const auto& e : report.entries)
            if (e.id == "S4_CLOSED_FORMS" && e.status != gpforge::AuditStatus::CONFIRMED)
                return 1;
    return 0;
}

int cmd_length10(const std::string& tstr, unsigned height, const std::string& out_path) {
    Rational t = parse_rational(tstr);
    require_nondegenerate_ratio(t);
    if (height < 1) throw usage_error("--height must be >= 1");
    auto all = gpforge::length10_search(t, gpforge::HeightBound(height));
    json hits = json::array(), degenerate = json::array();
    for (const auto& h : all) (h.degenerate ? degenerate : hits).push_back(h);
    std::cerr << "scanned projective classes of height <= " << height << ": " << hits.size()
              << " hit(s), " << degenerate.size() << " degenerate class(es)\n";
    emit(json{{"schema", kSchema},
              {"command", "length10"},
              {"t", t},
              {"height", height},
              {"hits", hits},
              {"degenerate_hits", degenerate}},
         out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gpforge: hyperelliptic curves carrying 8-term geometric progressions "
                 "of rational points, exactly"};
    app.require_subcommand(1);
    app.fallthrough();  // let --out appear after the subcommand name
    std::string out_path;
    app.add_option("--out", out_path, "write JSON output to a file instead of stdout");

    auto* generate = app.add_subcommand(
        "generate", "run the pipeline for (T, n) over a list of Jacobian multiples");
    std::string gen_T, gen_m{"1"};
    int gen_n = 2;
    long gen_cap = gpforge::default_multiple_cap();
    generate->add_option("--T", gen_T, "curve-level ratio, num/den or integer")->required();
    generate->add_option("--n", gen_n, "exponent n in y^2 = a x^(2n) + b x^n + a")->required();
    generate->add_option("--m", gen_m, "comma-separated multiples (default 1)");
    generate->add_option("--cap", gen_cap, "bound on |m| (default 5)");

    auto* example = app.add_subcommand("example", "the built-in numeric example (T=2, n=2)");
    bool integer_model = false;
    example->add_flag("--integer-model", integer_model, "emit the denominator-cleared model");

    auto* verify = app.add_subcommand("verify", "test x = p * ratio^i for rational points");
    std::string v_curve, v_poly, v_p, v_ratio, v_range;
    verify->add_option("--curve", v_curve, "trinomial curve 'a,b,n'");
    verify->add_option("--poly", v_poly, "general curve coefficients 'c0,...,cd' (descending)");
    verify->add_option("--p", v_p, "progression base")->required();
    verify->add_option("--ratio", v_ratio, "progression ratio")->required();
    verify->add_option("--range", v_range, "index range 'lo..hi'")->required();

    auto* search = app.add_subcommand("search", "bounded-height search for GP sequences");
    std::string s_curve, s_poly;
    unsigned s_height = 4;
    int s_min_len = 3;
    search->add_option("--curve", s_curve, "trinomial curve 'a,b,n'");
    search->add_option("--poly", s_poly, "general curve coefficients");
    search->add_option("--height", s_height, "height bound on enumerated (p, ratio)");
    search->add_option("--min-len", s_min_len, "minimum sequence length (default 3)");

    auto* audit = app.add_subcommand("audit", "audit the printed formulas against the pipeline");
    std::string a_t{"2,3,5/2"};
    uint64_t a_seed = 0;
    bool a_strict = false;
    audit->add_option("--t", a_t, "comma-separated ratio samples (default 2,3,5/2)");
    audit->add_option("--seed", a_seed, "sampling seed (default 0)");
    audit->add_flag("--strict", a_strict, "exit 1 if the closed-form anchor is refuted");

    auto* length10 = app.add_subcommand("length10", "simultaneous-square search for 10-term GPs");
    std::string l_t;
    unsigned l_height = 50;
    length10->add_option("--t", l_t, "conic-level ratio")->required();
    length10->add_option("--height", l_height, "projective height bound (default 50)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen_T, gen_n, gen_m, gen_cap, out_path);
        if (example->parsed()) return cmd_example(integer_model, out_path);
        if (verify->parsed()) return cmd_verify(v_curve, v_poly, v_p, v_ratio, v_range, out_path);
        if (search->parsed()) return cmd_search(s_curve, s_poly, s_height, s_min_len, out_path);
        if (audit->parsed()) return cmd_audit(a_t, a_seed, a_strict, out_path);
        if (length10->parsed()) return cmd_length10(l_t, l_height, out_path);
    } catch (const usage_error& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
