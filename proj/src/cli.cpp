#include "fpsrev/cli.hpp"

#include "fpsrev/autolab.hpp"
#include "fpsrev/graded_matrix.hpp"
#include "fpsrev/inversion.hpp"
#include "fpsrev/series.hpp"
#include "fpsrev/series_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace fpsrev::cli {

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::FormatError:
    case ErrorCode::DuplicateTerm:
    case ErrorCode::DegreeOverflow:
    case ErrorCode::ContextMismatch:
    case ErrorCode::LengthMismatch:
        return Format;
    case ErrorCode::ConstantTerm:
    case ErrorCode::NonIdentityLinearPart:
        return Precondition;
    case ErrorCode::VerificationMismatch:
        return Mismatch;
    case ErrorCode::ResourceLimit:
        return Resource;
    case ErrorCode::NotDominated:
    case ErrorCode::RankOutOfRange:
    case ErrorCode::DivisionByZero:
    case ErrorCode::InvalidArgument:
        return Usage;
    }
    return Usage;
}

namespace {

struct Options {
    std::string in;
    std::string out;
    std::string outer;
    std::string inner;
    std::optional<unsigned> degree;
    std::string method = "all";
    bool json = false;
    bool general = false;
    bool exp = false;
    unsigned times = 1;
    unsigned m = 1;
    unsigned max_m = 6;
    std::size_t max_terms = ResourceLimits{}.max_terms;
    unsigned max_degree = ResourceLimits{}.max_degree;
    unsigned n = 2;
    std::uint64_t seed = 1;
    unsigned monomial_degree = 2;
    double density = 1.0;
};

TruncatedSeriesMap with_degree(const TruncatedSeriesMap& f, std::optional<unsigned> degree)
{
    if (!degree || *degree == f.degree_cap()) {
        return f;
    }
    return TruncatedSeriesMap(SeriesContext(f.nvars(), *degree), f.components());
}

TruncatedSeriesMap load(const std::string& path, std::optional<unsigned> degree)
{
    return with_degree(read_series_file(path), degree);
}

void emit(const Options& opt, std::ostream& out, const std::string& text)
{
    if (opt.out.empty()) {
        out << text;
    } else {
        write_text_file(opt.out, text);
    }
}

std::string dump_json(const nlohmann::json& j)
{
    return j.dump(2) + "\n";
}

std::string order_text(const std::optional<unsigned>& o)
{
    return o ? std::to_string(*o) : std::string("inf");
}

nlohmann::json order_json(const std::optional<unsigned>& o)
{
    return o ? nlohmann::json(*o) : nlohmann::json(nullptr);
}

bool is_two_sided_inverse(const TruncatedSeriesMap& phi, const TruncatedSeriesMap& psi)
{
    const auto id = identity_map(phi.context());
    return compose(phi, psi) == id && compose(psi, phi) == id;
}

int cmd_invert(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto phi = load(opt.in, opt.degree);
    TruncatedSeriesMap psi(phi.context());
    bool verified = false;
    if (opt.general) {
        psi = invert_general(phi);
    } else if (opt.method == "neumann") {
        psi = invert_neumann(phi);
    } else if (opt.method == "recurrence") {
        psi = invert_recurrence(phi);
    } else if (opt.method == "fixpoint") {
        psi = invert_fixpoint(phi);
    } else {
        const auto a = invert_neumann(phi);
        const auto b = invert_recurrence(phi);
        const auto c = invert_fixpoint(phi);
        if (!(a == b) || !(a == c)) {
            err << "error: inversion methods disagree\n";
            return Mismatch;
        }
        if (!is_two_sided_inverse(phi, a)) {
            err << "error: inverse does not compose to the identity within degree " << phi.degree_cap() << "\n";
            return Mismatch;
        }
        psi = a;
        verified = true;
    }
    if (opt.json) {
        auto j = series_to_json(psi);
        j["method"] = opt.general ? "general" : opt.method;
        j["verified"] = verified;
        emit(opt, out, dump_json(j));
    } else {
        emit(opt, out, emit_series(psi));
    }
    if (verified) {
        err << "verified: neumann = recurrence = fixpoint; both compositions are the identity through degree "
            << phi.degree_cap() << "\n";
    }
    return Success;
}

int cmd_compose(const Options& opt, std::ostream& out)
{
    const auto outer = load(opt.outer, opt.degree);
    const auto inner = load(opt.inner, opt.degree);
    const auto result = compose(outer, inner);
    emit(opt, out, opt.json ? dump_json(series_to_json(result)) : emit_series(result));
    return Success;
}

int cmd_iterate(const Options& opt, std::ostream& out)
{
    const auto phi = load(opt.in, opt.degree);
    const auto result = iterate(phi, opt.times);
    emit(opt, out, opt.json ? dump_json(series_to_json(result)) : emit_series(result));
    return Success;
}

int cmd_phi_seq(const Options& opt, std::ostream& out)
{
    const auto phi = load(opt.in, opt.degree);
    const PhiSequence seq(phi);
    std::ostringstream text;
    auto records = nlohmann::json::array();
    text << "vars " << phi.nvars() << "\ndegree " << phi.degree_cap() << "\n";
    for (unsigned m = 0; m <= opt.m; ++m) {
        const auto term = seq.term(m);
        const auto ord = order(term);
        text << "# phi " << m << " order " << order_text(ord) << "\n" << emit_terms(term.components());
        records.push_back({{"m", m}, {"order", order_json(ord)}, {"terms", terms_to_json(term.components())}});
    }
    if (opt.json) {
        emit(opt, out, dump_json({{"vars", phi.nvars()}, {"degree", phi.degree_cap()}, {"phi", records}}));
    } else {
        emit(opt, out, text.str());
    }
    return Success;
}

int cmd_tail_test(const Options& opt, std::ostream& out)
{
    const auto series = read_series_file(opt.in);
    const auto phi = PolynomialMap::from_series(series);
    const ResourceLimits limits{opt.max_terms, opt.max_degree};
    const auto report = tail_vanishing_test(phi, opt.max_m, limits);

    if (opt.json) {
        auto records = nlohmann::json::array();
        for (const auto& r : report.records) {
            records.push_back({{"m", r.m}, {"degree", order_json(r.degree)}, {"terms", r.terms}, {"zero", r.zero}});
        }
        nlohmann::json j = {
            {"searched_upto", report.searched_upto},
            {"vanishing_m0", report.vanishing_m0 ? nlohmann::json(*report.vanishing_m0) : nlohmann::json(nullptr)},
            {"records", records},
            {"certificate_inverse", report.certificate_inverse
                                        ? nlohmann::json{{"vars", phi.nvars()},
                                                         {"terms", terms_to_json(report.certificate_inverse->components())}}
                                        : nlohmann::json(nullptr)},
        };
        emit(opt, out, dump_json(j));
        return Success;
    }
    std::ostringstream text;
    text << "# tail vanishing test, m = 1.." << report.searched_upto << "\n";
    text << "# m degree terms zero\n";
    for (const auto& r : report.records) {
        text << r.m << ' ' << (r.degree ? std::to_string(*r.degree) : std::string("-")) << ' ' << r.terms << ' '
             << (r.zero ? "yes" : "no") << "\n";
    }
    if (report.vanishing_m0) {
        text << "vanishing_m0 " << *report.vanishing_m0 << "\n";
        text << "# certificate inverse, verified by exact composition\n";
        text << emit_polynomial_map(*report.certificate_inverse);
    } else {
        text << "vanishing_m0 none\n";
    }
    emit(opt, out, text.str());
    return Success;
}

int cmd_jacobian_check(const Options& opt, std::ostream& out)
{
    const auto series = load(opt.in, opt.degree);
    const auto phi = PolynomialMap::from_series(series);
    const auto check = jacobian_form_check(phi, opt.m, series.degree_cap());
    const unsigned n = phi.nvars();
    if (opt.json) {
        auto residual = nlohmann::json::array();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (const auto& [a, c] : check.residual.at(i, j).terms()) {
                    residual.push_back({{"row", i + 1},
                                        {"col", j + 1},
                                        {"exponent", std::vector<MultiIndex::value_type>(a.entries().begin(), a.entries().end())},
                                        {"coefficient", c.to_string()}});
                }
            }
        }
        emit(opt, out, dump_json({{"m", opt.m}, {"degree", series.degree_cap()}, {"holds", check.holds}, {"residual", residual}}));
        return Success;
    }
    std::ostringstream text;
    text << "holds " << (check.holds ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [a, c] : check.residual.at(i, j).terms()) {
                text << "residual " << (i + 1) << ' ' << (j + 1) << " |";
                for (auto e : a.entries()) {
                    text << ' ' << e;
                }
                text << " | " << c << "\n";
            }
        }
    }
    emit(opt, out, text.str());
    return Success;
}

int cmd_matrix(const Options& opt, std::ostream& out)
{
    const auto phi = load(opt.in, opt.degree);
    BlockMatrix m = from_series(phi);
    if (opt.exp) {
        m = odot_exp(m);
    }
    if (opt.json) {
        emit(opt, out, dump_json(matrix_to_json(m)));
    } else {
        std::ostringstream text;
        dump(text, m);
        emit(opt, out, text.str());
    }
    return Success;
}

int cmd_bench(const Options& opt, std::ostream& out)
{
    std::mt19937_64 rng(opt.seed);
    RandomMapOptions ropt;
    ropt.nvars = opt.n;
    ropt.min_degree = opt.monomial_degree;
    ropt.max_degree = opt.monomial_degree;
    ropt.density = opt.density;
    const SeriesContext ctx(opt.n, *opt.degree);
    const auto phi = random_unit_map(ropt, rng).truncate(ctx);

    struct Timing {
        std::string name;
        double seconds;
        TruncatedSeriesMap result;
    };
    std::vector<Timing> timings;
    auto time_one = [&](const std::string& name, TruncatedSeriesMap (*fn)(const TruncatedSeriesMap&)) {
        const auto t0 = std::chrono::steady_clock::now();
        auto result = fn(phi);
        const auto t1 = std::chrono::steady_clock::now();
        timings.push_back({name, std::chrono::duration<double>(t1 - t0).count(), std::move(result)});
    };
    time_one("neumann", &invert_neumann);
    time_one("recurrence", &invert_recurrence);
    time_one("fixpoint", &invert_fixpoint);

    const bool agree = std::all_of(timings.begin(), timings.end(),
                                   [&](const Timing& t) { return t.result == timings.front().result; });
    const bool inverse_ok = agree && is_two_sided_inverse(phi, timings.front().result);

    if (opt.json) {
        auto runs = nlohmann::json::array();
        for (const auto& t : timings) {
            runs.push_back({{"method", t.name}, {"seconds", t.seconds}, {"terms", t.result.term_count()}});
        }
        out << dump_json({{"n", opt.n},
                          {"degree", *opt.degree},
                          {"seed", opt.seed},
                          {"input_terms", phi.term_count()},
                          {"runs", runs},
                          {"agreement", agree},
                          {"inverse_verified", inverse_ok}});
    } else {
        out << "# bench n=" << opt.n << " degree=" << *opt.degree << " seed=" << opt.seed
            << " input_terms=" << phi.term_count() << "\n";
        for (const auto& t : timings) {
            out << std::left << std::setw(11) << t.name << std::fixed << std::setprecision(4) << t.seconds
                << " s  terms " << t.result.term_count() << "\n";
        }
        out << "agreement " << (agree ? "yes" : "no") << "\n";
        out << "inverse_verified " << (inverse_ok ? "yes" : "no") << "\n";
    }
    return agree && inverse_ok ? Success : Mismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact composition and inversion of multivariate formal power series", "fpsrev"};
    app.require_subcommand(1);
    Options opt;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Emit JSON instead of text"); };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "Write the result to a file"); };
    auto add_degree = [&](CLI::App* sub) {
        sub->add_option("--degree", opt.degree, "Truncation degree (defaults to the file header)")
            ->check(CLI::PositiveNumber);
    };

    auto* invert = app.add_subcommand("invert", "Invert a map with identity linear part");
    invert->add_option("--in", opt.in, "Series file")->required();
    add_degree(invert);
    invert->add_option("--method", opt.method, "neumann | recurrence | fixpoint | all")
        ->check(CLI::IsMember({"neumann", "recurrence", "fixpoint", "all"}));
    invert->add_flag("--general", opt.general, "Accept any invertible linear part (extension)");
    add_out(invert);
    add_json(invert);

    auto* comp = app.add_subcommand("compose", "Compose two maps, outer after inner");
    comp->add_option("--outer", opt.outer, "Outer series file")->required();
    comp->add_option("--inner", opt.inner, "Inner series file")->required();
    add_degree(comp);
    add_out(comp);
    add_json(comp);

    auto* iter = app.add_subcommand("iterate", "k-fold self-composition");
    iter->add_option("--in", opt.in, "Series file")->required();
    iter->add_option("--times", opt.times, "Number of compositions")->required();
    add_degree(iter);
    add_out(iter);
    add_json(iter);

    auto* phiseq = app.add_subcommand("phi-seq", "Emit the terms Phi_0..Phi_M and their orders");
    phiseq->add_option("--in", opt.in, "Series file")->required();
    phiseq->add_option("--m", opt.m, "Last term index")->required();
    add_degree(phiseq);
    add_out(phiseq);
    add_json(phiseq);

    auto* tail = app.add_subcommand("tail-test", "Exact search for a vanishing Phi_m of a polynomial map");
    tail->add_option("--in", opt.in, "Series file read as a polynomial map")->required();
    tail->add_option("--max-m", opt.max_m, "Largest m to compute")->required()->check(CLI::PositiveNumber);
    tail->add_option("--max-terms", opt.max_terms, "Abort when a polynomial exceeds this many terms");
    tail->add_option("--max-degree", opt.max_degree, "Abort when a polynomial exceeds this degree");
    add_out(tail);
    add_json(tail);

    auto* jac = app.add_subcommand("jacobian-check", "Evaluate the Jacobian form of the vanishing condition");
    jac->add_option("--in", opt.in, "Series file read as a polynomial map")->required();
    jac->add_option("--m", opt.m, "Index m")->required()->check(CLI::PositiveNumber);
    add_degree(jac);
    add_out(jac);
    add_json(jac);

    auto* mat = app.add_subcommand("matrix", "Dump the block matrix of a map");
    mat->add_option("--in", opt.in, "Series file")->required();
    add_degree(mat);
    mat->add_flag("--exp", opt.exp, "Dump the symmetric exponential instead");
    add_out(mat);
    add_json(mat);

    auto* bench = app.add_subcommand("bench", "Time the three inversion methods on a seeded random map");
    bench->add_option("--n", opt.n, "Number of variables")->required()->check(CLI::PositiveNumber);
    bench->add_option("--degree", opt.degree, "Truncation degree")->required()->check(CLI::PositiveNumber);
    bench->add_option("--seed", opt.seed, "Random seed")->required();
    bench->add_option("--monomial-degree", opt.monomial_degree, "Degree of the random terms (>= 2)");
    bench->add_option("--density", opt.density, "Probability that each monomial is present");
    add_json(bench);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : Usage;
    }

    try {
        if (invert->parsed()) {
            return cmd_invert(opt, out, err);
        }
        if (comp->parsed()) {
            return cmd_compose(opt, out);
        }
        if (iter->parsed()) {
            return cmd_iterate(opt, out);
        }
        if (phiseq->parsed()) {
            return cmd_phi_seq(opt, out);
        }
        if (tail->parsed()) {
            return cmd_tail_test(opt, out);
        }
        if (jac->parsed()) {
            return cmd_jacobian_check(opt, out);
        }
        if (mat->parsed()) {
            return cmd_matrix(opt, out);
        }
        if (bench->parsed()) {
            return cmd_bench(opt, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

} // namespace fpsrev::cli
