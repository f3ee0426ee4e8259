#include "agc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "agc/io.hpp"

namespace agc {

namespace {

constexpr unsigned kDefaultSeed = 12345;
constexpr long kDefaultTrials = 200;

struct Loaded {
    CurveSpec spec;
    std::vector<AffinePoint> points;
    OrbitDecomposition decomp;
};

Loaded load(const std::string& src) {
    Loaded ld;
    ld.spec = curve_from_source(src);
    ld.points = enumerate_points(ld.spec);
    ld.decomp = decompose(ld.spec, ld.points);
    return ld;
}

void require_lambda(long lambda, long n) {
    if (lambda < 0 || lambda >= n)
        throw std::invalid_argument("lambda must lie in [0, n) with n = " + std::to_string(n));
}

std::string join_codes(const Codeword& cw) {
    std::ostringstream os;
    for (size_t i = 0; i < cw.size(); ++i) {
        if (i) os << ",";
        os << cw[i].code();
    }
    return os.str();
}

std::vector<FieldElement> parse_message(const Field& F, const std::string& text) {
    std::vector<FieldElement> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        long code = std::stol(tok);
        if (code < 0 || code >= (long)F.order())
            throw std::invalid_argument("message symbol " + tok + " outside [0, q)");
        out.push_back(F.element((uint32_t)code));
    }
    return out;
}

std::string gb_text(const GroebnerBasis& gb) {
    std::ostringstream os;
    for (int i = 0; i < gb.nrows(); ++i) {
        os << "g" << i + 1;
        const ModuleElement& e = gb.element(i);
        for (int r = 0; r < e.nrows(); ++r) {
            os << " |";
            if (e.row(r).is_zero()) {
                os << " -";
                continue;
            }
            for (uint32_t c : e.row(r).codes()) os << " " << c;
        }
        os << "  (" << gb.provenance()[(size_t)i] << ")\n";
    }
    return os.str();
}

std::string diagram_text(const RootDiagram& d) {
    std::ostringstream os;
    os << "lambda " << d.lambda << "\n";
    for (size_t i = 0; i < d.rows.size(); ++i)
        os << "row " << i + 1 << " " << d.rows[i].pattern() << "  (" << d.rows[i].provenance
           << ")\n";
    os << "empty boxes " << d.empty_boxes() << "\n";
    return os.str();
}

struct VerifyState {
    std::ostream& out;
    bool all_ok = true;
    void report(const std::string& name, bool ok, const std::string& detail = "") {
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !detail.empty()) out << ": " << detail;
        out << "\n";
        all_ok = all_ok && ok;
    }
};

int cmd_verify(const Loaded& ld, long lambda, unsigned seed, long trials, std::ostream& out) {
    const CurveSpec& spec = ld.spec;
    const OrbitDecomposition& dec = ld.decomp;
    VerifyState st{out};

    ValidationReport rep = validate(spec);
    st.report("curve validation", rep.ok());

    bool pts_ok = (long)ld.points.size() == dec.n && dec.n > 0;
    for (const auto& pt : ld.points) pts_ok = pts_ok && on_curve(spec, pt);
    st.report("point enumeration", pts_ok);

    bool orb_ok = true;
    long total = 0;
    for (const auto& orb : dec.orbits) {
        total += orb.size();
        for (long j = 0; j < orb.size(); ++j) {
            const AffinePoint& expect = orb.points[(size_t)((j + 1) % orb.size())];
            if (!(apply_sigma(spec, orb.points[(size_t)j]) == expect)) orb_ok = false;
        }
    }
    orb_ok = orb_ok && total == dec.n;
    st.report("orbit decomposition", orb_ok);

    GenMatrix mat = generator_matrix(spec, dec, lambda);
    long k = code_dim(mat);
    st.report("generator matrix rank equals semigroup count",
              k == semigroup_dim(spec.a, spec.b, lambda),
              "rank=" + std::to_string(k));

    GroebnerBasis oracle = oracle_gb(spec, dec, lambda);
    bool gb_ok = true;
    long nonstd = 0;
    const Field& F = spec.field;
    for (int i = 0; i < oracle.nrows(); ++i) {
        UniPoly kern = UniPoly::monomial(F, Var::t, dec.size(i), F.one()) -
                       UniPoly::constant(F, Var::t, F.one());
        gb_ok = gb_ok && divides_exactly(oracle.leading_poly(i), kern);
        nonstd += dec.size(i) - oracle.leading_degree(i);
    }
    gb_ok = gb_ok && nonstd == k;
    for (const auto& row : mat.rows)
        gb_ok = gb_ok && reduces_to_zero(codeword_to_module(row, dec), oracle);
    st.report("reference basis invariants", gb_ok);

    bool diag_ok = true;
    std::string diag_detail;
    RootDiagram dfast;
    try {
        dfast = diagram_fast(spec, dec, lambda);
        diag_ok = same_marks(dfast, diagram_from_gb(oracle, dec, lambda, "oracle"));
    } catch (const std::exception& ex) {
        diag_ok = false;
        diag_detail = ex.what();
    }
    st.report("fast diagram matches oracle diagram", diag_ok, diag_detail);

    bool interp_ok = diag_ok;
    std::string interp_detail = diag_ok ? "" : "fast diagram unavailable";
    if (diag_ok) {
        try {
            auto interp = build_interpolants(dec);
            GroebnerBasis fast = interpolation_gb(spec, dec, dfast, interp);
            for (int i = 0; i < fast.nrows(); ++i)
                interp_ok = interp_ok && fast.leading_degree(i) == oracle.leading_degree(i);
            interp_ok = interp_ok && same_submodule(fast, oracle);
        } catch (const std::exception& ex) {
            interp_ok = false;
            interp_detail = ex.what();
        }
    }
    st.report("interpolation basis generates the same module", interp_ok, interp_detail);

    RootDiagram doracle = diagram_from_gb(oracle, dec, lambda, "oracle");
    st.report("empty boxes equal the code dimension", doracle.empty_boxes() == k);

    bool enc_ok = true;
    std::string enc_detail;
    try {
        InfoPositions positions = info_positions(oracle, dec);
        enc_ok = (long)positions.size() == k;
        GenMatrixEncoder baseline(mat, positions, dec);
        std::mt19937 rng(seed);
        std::uniform_int_distribution<uint32_t> dist(0, F.order() - 1);
        auto check_message = [&](const std::vector<FieldElement>& w) {
            Codeword c = encode(w, oracle, dec);
            if (extract_message(c, positions, dec) != w) return false;
            if (baseline.encode(w) != c) return false;
            return in_row_space(mat.rows, c);
        };
        double total_messages = 1;
        for (long i = 0; i < k && total_messages <= 65536; ++i) total_messages *= F.order();
        if (k <= 8 && total_messages <= 65536) {
            std::vector<FieldElement> w((size_t)k, F.zero());
            bool carry_done = false;
            while (!carry_done && enc_ok) {
                enc_ok = enc_ok && check_message(w);
                long pos = 0;
                while (pos < k) {
                    uint32_t next = w[(size_t)pos].code() + 1;
                    if (next < F.order()) {
                        w[(size_t)pos] = F.element(next);
                        break;
                    }
                    w[(size_t)pos] = F.zero();
                    ++pos;
                }
                carry_done = pos == k;
            }
        } else {
            for (long trial = 0; trial < trials && enc_ok; ++trial) {
                std::vector<FieldElement> w;
                for (long i = 0; i < k; ++i) w.push_back(F.element(dist(rng)));
                enc_ok = enc_ok && check_message(w);
            }
        }
    } catch (const std::exception& ex) {
        enc_ok = false;
        enc_detail = ex.what();
    }
    st.report("systematic encoding round trip", enc_ok, enc_detail);

    out << (st.all_ok ? "OK" : "FAILED") << "\n";
    return st.all_ok ? 0 : 1;
}

int64_t time_encode_ns(const std::function<Codeword()>& enc) {
    int64_t best = -1;
    for (int rep = 0; rep < 3; ++rep) {
        auto start = std::chrono::steady_clock::now();
        Codeword c = enc();
        auto stop = std::chrono::steady_clock::now();
        (void)c;
        int64_t ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        if (best < 0 || ns < best) best = ns;
    }
    return best;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"one-point algebraic-geometry codes on curves f(y) = g(x): orbit "
                 "decompositions, root diagrams, POT Groebner bases, systematic encoding"};
    app.require_subcommand(1);

    std::string format = "text";
    if (const char* env = std::getenv("AGC_FORMAT")) format = env;

    std::string src, message_text;
    long lambda = -1;
    std::string method;
    unsigned seed = kDefaultSeed;
    long trials = kDefaultTrials;
    bool check = false, lambda_sweep = false;
    long max_lambda = -1;

    auto add_common = [&](CLI::App* sub, bool with_lambda) {
        sub->add_option("source", src, "curve config file or preset such as x_q2r(2,1)")
            ->required();
        sub->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_lambda) sub->add_option("--lambda", lambda, "pole order bound")->required();
    };

    CLI::App* curve = app.add_subcommand("curve", "curve-level commands");
    curve->require_subcommand(1);
    CLI::App* curve_validate = curve->add_subcommand("validate", "run the curve checks");
    add_common(curve_validate, false);
    CLI::App* curve_points = curve->add_subcommand("points", "list the affine rational points");
    add_common(curve_points, false);

    CLI::App* orbits_cmd = app.add_subcommand("orbits", "orbit decomposition table");
    add_common(orbits_cmd, false);

    CLI::App* genmat_cmd = app.add_subcommand("genmat", "generator matrix of the code");
    add_common(genmat_cmd, true);

    CLI::App* dim_cmd = app.add_subcommand("dim", "code dimension");
    add_common(dim_cmd, true);

    CLI::App* diagram_cmd = app.add_subcommand("diagram", "root diagram");
    add_common(diagram_cmd, true);
    diagram_cmd->add_option("--method", method, "fast, oracle or both")
        ->default_val("fast")
        ->check(CLI::IsMember({"fast", "oracle", "both"}));

    CLI::App* gb_cmd = app.add_subcommand("gb", "POT Groebner basis of the code module");
    add_common(gb_cmd, true);
    gb_cmd->add_option("--method", method, "fast or oracle")
        ->default_val("fast")
        ->check(CLI::IsMember({"fast", "oracle"}));
    gb_cmd->add_flag("--check", check, "cross-check the two construction routes");

    CLI::App* encode_cmd = app.add_subcommand("encode", "systematic encoding");
    add_common(encode_cmd, true);
    encode_cmd->add_option("--message", message_text, "comma-separated symbol codes")->required();
    encode_cmd->add_option("--method", method, "gb, genmat or both")
        ->default_val("gb")
        ->check(CLI::IsMember({"gb", "genmat", "both"}));

    CLI::App* bench_cmd = app.add_subcommand("bench", "storage and encode timing sweep (CSV)");
    add_common(bench_cmd, false);
    bench_cmd->add_flag("--lambda-sweep", lambda_sweep, "sweep lambda over [0, n)");
    bench_cmd->add_option("--max-lambda", max_lambda, "cap the sweep");
    bench_cmd->add_option("--seed", seed, "seed for the timed message");

    CLI::App* verify_cmd = app.add_subcommand("verify", "end-to-end consistency pipeline");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--seed", seed, "seed for randomized checks");
    verify_cmd->add_option("--trials", trials, "randomized trial count");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (curve_validate->parsed()) {
            CurveSpec spec = curve_from_source(src);
            ValidationReport rep = validate(spec);
            if (format == "json") out << validation_to_json(rep).dump(2) << "\n";
            else out << rep.summary() << (rep.ok() ? "valid" : "invalid") << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (curve_points->parsed()) {
            CurveSpec spec = curve_from_source(src);
            auto pts = enumerate_points(spec);
            if (format == "json") {
                json j = json::array();
                for (const auto& pt : pts) j.push_back({pt.x.code(), pt.y.code()});
                out << json{{"n", pts.size()}, {"points", j}}.dump(2) << "\n";
            } else {
                out << "n " << pts.size() << "\n";
                for (const auto& pt : pts) out << pt.x.code() << " " << pt.y.code() << "\n";
            }
            return 0;
        }

        Loaded ld = load(src);

        if (orbits_cmd->parsed()) {
            if (format == "json") {
                out << orbits_to_json(ld.decomp).dump(2) << "\n";
            } else {
                out << "r " << ld.decomp.r << " s " << ld.decomp.s << " n " << ld.decomp.n
                    << " nu " << ld.decomp.nu << " rho " << ld.decomp.rho1 << " "
                    << ld.decomp.rho2 << " " << ld.decomp.rho3 << "\n";
                for (const auto& orb : ld.decomp.orbits)
                    out << "orbit " << orb.index + 1 << " "
                        << (orb.kind == OrbitKind::Long ? "long" : "short") << " len "
                        << orb.size() << " base " << orb.points[0].x.code() << " "
                        << orb.points[0].y.code() << " ydist " << orb.y_values.size() << "\n";
            }
            return 0;
        }

        if (genmat_cmd->parsed() || dim_cmd->parsed()) {
            require_lambda(lambda, ld.decomp.n);
            GenMatrix mat = generator_matrix(ld.spec, ld.decomp, lambda);
            if (dim_cmd->parsed()) {
                out << code_dim(mat) << "\n";
                return 0;
            }
            if (format == "json") {
                out << genmat_to_json(mat).dump(2) << "\n";
            } else {
                out << "k " << mat.k() << " n " << mat.n() << "\n";
                for (const auto& row : mat.rows) out << join_codes(row) << "\n";
            }
            return 0;
        }

        if (diagram_cmd->parsed()) {
            require_lambda(lambda, ld.decomp.n);
            if (method == "oracle" || method == "both") {
                RootDiagram d = diagram_oracle(ld.spec, ld.decomp, lambda);
                if (method == "oracle") {
                    out << (format == "json" ? diagram_to_json(d).dump(2) + "\n"
                                             : diagram_text(d));
                    return 0;
                }
                RootDiagram f = diagram_fast(ld.spec, ld.decomp, lambda);
                out << "fast\n" << diagram_text(f) << "oracle\n" << diagram_text(d) << "DIFF\n";
                for (size_t i = 0; i < d.rows.size(); ++i)
                    if (d.rows[i].marked != f.rows[i].marked)
                        out << "row " << i + 1 << " fast " << f.rows[i].pattern() << " oracle "
                            << d.rows[i].pattern() << "\n";
                return 0;
            }
            RootDiagram d = diagram_fast(ld.spec, ld.decomp, lambda);
            out << (format == "json" ? diagram_to_json(d).dump(2) + "\n" : diagram_text(d));
            return 0;
        }

        if (gb_cmd->parsed()) {
            require_lambda(lambda, ld.decomp.n);
            GroebnerBasis gb = [&] {
                if (method == "oracle") return oracle_gb(ld.spec, ld.decomp, lambda);
                RootDiagram d = diagram_fast(ld.spec, ld.decomp, lambda);
                return interpolation_gb(ld.spec, ld.decomp, d, build_interpolants(ld.decomp));
            }();
            if (format == "json") out << gb_to_json(gb).dump(2) << "\n";
            else out << gb_text(gb);
            if (check) {
                GroebnerBasis other = method == "oracle"
                                          ? interpolation_gb(ld.spec, ld.decomp,
                                                             diagram_fast(ld.spec, ld.decomp, lambda),
                                                             build_interpolants(ld.decomp))
                                          : oracle_gb(ld.spec, ld.decomp, lambda);
                bool lt_ok = true;
                for (int i = 0; i < gb.nrows(); ++i)
                    lt_ok = lt_ok && gb.leading_degree(i) == other.leading_degree(i);
                bool same = same_submodule(gb, other);
                out << "check leading degrees: " << (lt_ok ? "ok" : "FAIL") << "\n";
                out << "check module equality: " << (same ? "ok" : "FAIL") << "\n";
                if (!lt_ok || !same) return 1;
            }
            return 0;
        }

        if (encode_cmd->parsed()) {
            require_lambda(lambda, ld.decomp.n);
            std::vector<FieldElement> w = parse_message(ld.spec.field, message_text);
            GenMatrix mat = generator_matrix(ld.spec, ld.decomp, lambda);
            GroebnerBasis gb = [&] {
                if (method == "genmat") return oracle_gb(ld.spec, ld.decomp, lambda);
                RootDiagram d = diagram_fast(ld.spec, ld.decomp, lambda);
                return interpolation_gb(ld.spec, ld.decomp, d, build_interpolants(ld.decomp));
            }();
            InfoPositions positions = info_positions(gb, ld.decomp);
            if ((long)w.size() != (long)positions.size())
                throw std::invalid_argument("message must have k = " +
                                            std::to_string(positions.size()) + " symbols");
            if (method == "gb" || method == "both") {
                Codeword c = encode(w, gb, ld.decomp);
                out << (method == "both" ? "gb: " : "") << join_codes(c) << "\n";
            }
            if (method == "genmat" || method == "both") {
                GenMatrixEncoder enc(mat, positions, ld.decomp);
                Codeword c = enc.encode(w);
                out << (method == "both" ? "genmat: " : "") << join_codes(c) << "\n";
            }
            if (method == "both") {
                Codeword c1 = encode(w, gb, ld.decomp);
                GenMatrixEncoder enc(mat, positions, ld.decomp);
                out << (c1 == enc.encode(w) ? "agree" : "DISAGREE") << "\n";
            }
            return 0;
        }

        if (bench_cmd->parsed()) {
            long lim = ld.decomp.n - 1;
            if (max_lambda >= 0 && max_lambda < lim) lim = max_lambda;
            if (!lambda_sweep) lim = std::min(lim, (long)0);
            out << "lambda,k,n,gb_coeffs,genmat_coeffs,encode_ns_gb,encode_ns_genmat\n";
            auto interp = build_interpolants(ld.decomp);
            std::mt19937 rng(seed);
            for (long lam = 0; lam <= lim; ++lam) {
                GenMatrix mat = generator_matrix(ld.spec, ld.decomp, lam);
                RootDiagram d = diagram_fast(ld.spec, ld.decomp, lam);
                GroebnerBasis gb = interpolation_gb(ld.spec, ld.decomp, d, interp);
                InfoPositions positions = info_positions(gb, ld.decomp);
                StorageReport rep = storage_report(gb, mat);
                std::uniform_int_distribution<uint32_t> dist(0, ld.spec.field.order() - 1);
                std::vector<FieldElement> w;
                for (long i = 0; i < rep.k; ++i) w.push_back(ld.spec.field.element(dist(rng)));
                GenMatrixEncoder enc(mat, positions, ld.decomp);
                int64_t ns_gb = time_encode_ns([&] { return encode(w, gb, ld.decomp); });
                int64_t ns_mat = time_encode_ns([&] { return enc.encode(w); });
                out << lam << "," << rep.k << "," << rep.n << "," << rep.gb_coeffs << ","
                    << rep.genmat_coeffs << "," << ns_gb << "," << ns_mat << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            require_lambda(lambda, ld.decomp.n);
            return cmd_verify(ld, lambda, seed, trials, out);
        }
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
    err << "no command executed\n";
    return 2;
}

} // namespace agc
