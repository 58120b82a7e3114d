#include "cli.hpp"

#include "cremona/cremona_table.hpp"
#include "cremona/cyclotomic.hpp"
#include "cremona/errors.hpp"
#include "cremona/ff_oracle.hpp"
#include "cremona/intlinalg.hpp"
#include "cremona/torus_rank.hpp"
#include "cremona/weyl_audit.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace cremona::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "text";
    std::optional<std::uint64_t> p, t, n, d, q;
    std::uint64_t max_n = 60;
    std::string primes;
    std::string file;
    std::uint64_t seed = 0;
};

Json to_json(const mpz_class& value)
{
    if (value.fits_slong_p())
        return Json(value.get_si());
    return Json(value.get_str());
}

Json to_json(const std::vector<mpz_class>& values)
{
    Json arr = Json::array();
    for (const auto& v : values)
        arr.push_back(to_json(v));
    return arr;
}

Json to_json(const IntegerMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dimension(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string join(const std::vector<std::uint64_t>& values, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? sep : "") + std::to_string(values[i]);
    return out;
}

std::vector<PrimeModulus> to_primes(const std::vector<std::uint64_t>& values)
{
    std::vector<PrimeModulus> out;
    out.reserve(values.size());
    for (std::uint64_t v : values)
        out.emplace_back(v);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

template <typename T>
T require(const std::optional<T>& value, const char* flag)
{
    if (!value)
        throw UsageError(std::string("missing required option ") + flag);
    return *value;
}

// Output sink that renders either aligned text or one JSON document.
class Emitter {
public:
    Emitter(std::ostream& out, bool json, std::string command)
        : out_(out), json_(json), doc_{{"command", std::move(command)}, {"inputs", Json::object()},
                                        {"results", Json::object()}}
    {
    }

    bool json() const noexcept { return json_; }
    Json& inputs() { return doc_["inputs"]; }
    Json& results() { return doc_["results"]; }
    std::ostream& text() { return json_ ? discard_ : out_; }

    int finish(std::optional<bool> pass)
    {
        if (pass)
            doc_["pass"] = *pass;
        if (json_)
            out_ << doc_.dump(2) << '\n';
        else if (pass)
            out_ << (*pass ? "PASS" : "FAIL") << '\n';
        return pass.value_or(true) ? kSuccess : kVerificationFailure;
    }

private:
    std::ostream& out_;
    bool json_;
    Json doc_;
    std::ostringstream discard_;
};

// ---------------------------------------------------------------------------

int cmd_cyclotomic(const Options& opt, Emitter& emit)
{
    const std::uint64_t n = require(opt.n, "--n");
    emit.inputs()["n"] = n;
    if (opt.p)
        emit.inputs()["p"] = *opt.p;

    const IntegerPolynomial phi = cyclotomic_poly(n);
    auto& res = emit.results();
    res["degree"] = phi.degree();
    res["coefficients"] = to_json(phi.coefficients());
    emit.text() << "Phi_" << n << " (degree " << phi.degree() << ")\n";
    if (phi.degree() <= 64)
        emit.text() << "  " << phi.to_string() << '\n';

    if (opt.p) {
        const PrimeModulus p(*opt.p);
        const ModularPolynomial reduced = reduce_mod(phi, p);
        Json rows = Json::array();
        emit.text() << "reduction mod " << p.value() << ":\n";
        if (reduced.degree() <= 64)
            emit.text() << "  " << reduced.to_string() << '\n';
        emit.text() << std::setw(8) << "t" << std::setw(14) << "multiplicity" << '\n';
        for (std::uint64_t t : divisors(p.value() - 1)) {
            const std::uint64_t m = order_t_multiplicity(n, p, t);
            rows.push_back({{"t", t}, {"multiplicity", m}});
            emit.text() << std::setw(8) << t << std::setw(14) << m << '\n';
        }
        Json reduction;
        reduction["coefficients"] = reduced.coefficients();
        reduction["order_t_multiplicities"] = std::move(rows);
        res["reduction"] = std::move(reduction);
    }
    return emit.finish(std::nullopt);
}

int cmd_lemma(const Options& opt, Emitter& emit)
{
    const auto prime_values = opt.primes.empty() ? std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}
                                                 : parse_list(opt.primes);
    const auto primes = to_primes(prime_values);
    emit.inputs()["max_n"] = opt.max_n;
    emit.inputs()["primes"] = prime_values;
    if (opt.max_n == 0)
        throw UsageError("--max-n must be at least 1");

    const LemmaReport report = verify_lemma_range(opt.max_n, primes);
    auto& res = emit.results();
    res["triples_checked"] = report.triples_checked;
    res["identity_checks"] = report.identity_checks;
    res["root_count_checks"] = report.root_count_checks;
    Json bad = Json::array();
    for (const auto& c : report.counterexamples)
        bad.push_back({{"n", c.n}, {"p", c.p}, {"t", c.t}, {"check", c.check}, {"detail", c.detail}});
    res["counterexamples"] = std::move(bad);

    auto& txt = emit.text();
    txt << "multiplicity sweep n <= " << opt.max_n << ", primes {" << join(report.primes) << "}\n";
    txt << std::left << std::setw(24) << "  (n, p, t) triples" << report.triples_checked << '\n'
        << std::setw(24) << "  identity checks" << report.identity_checks << '\n'
        << std::setw(24) << "  root-count checks" << report.root_count_checks << '\n'
        << std::setw(24) << "  counterexamples" << report.counterexamples.size() << '\n'
        << std::right;
    for (const auto& c : report.counterexamples)
        txt << "  violated " << c.check << " at n=" << c.n << " p=" << c.p << " t=" << c.t << ": "
            << c.detail << '\n';
    return emit.finish(report.pass());
}

int cmd_bound(const Options& opt, Emitter& emit)
{
    const PrimeModulus p(require(opt.p, "--p"));
    emit.inputs()["p"] = p.value();
    if (opt.t && opt.q)
        throw UsageError("give either --t or --q, not both");
    std::uint64_t t = 0;
    if (opt.q) {
        emit.inputs()["q"] = *opt.q;
        t = t_for_field(FiniteField{*opt.q}, p);
    } else {
        t = require(opt.t, "--t");
        emit.inputs()["t"] = t;
    }
    if (opt.d)
        emit.inputs()["d"] = *opt.d;

    const CremonaBound bound = cremona_rank_bound(p, t);
    auto& res = emit.results();
    res["p"] = bound.p;
    res["t"] = bound.t;
    res["rank_bound"] = bound.rank_bound;
    res["attained_by"] = bound.attained_by;

    auto& txt = emit.text();
    txt << std::left << std::setw(14) << "p" << bound.p << '\n'
        << std::setw(14) << "t" << bound.t << '\n'
        << std::setw(14) << "rank bound" << bound.rank_bound << '\n'
        << std::setw(14) << "attained by" << bound.attained_by << '\n';
    if (opt.d) {
        const std::uint64_t torus = theorem_bound(*opt.d, t);
        res["torus_bound"] = torus;
        txt << std::setw(14) << "torus bound" << torus << "  (d = " << *opt.d << ")\n";
    }
    txt << std::right;
    return emit.finish(std::nullopt);
}

TorusFile load_torus(const Options& opt)
{
    if (opt.file.empty())
        throw UsageError("missing required option --file");
    return parse_torus_document(read_file(opt.file));
}

int cmd_torus_rank(const Options& opt, Emitter& emit)
{
    const TorusFile file = load_torus(opt);
    const PrimeModulus p(require(opt.p, "--p"));
    const std::uint64_t t = opt.t ? *opt.t : require(file.chi_order, "chi_order (file) or --t");
    emit.inputs()["file"] = opt.file;
    emit.inputs()["p"] = p.value();
    emit.inputs()["t"] = t;
    emit.inputs()["sigma"] = to_json(file.sigma);

    const GaloisTorusPresentation pres(file.sigma, t);
    const RankCertificate cert = fixed_point_rank(pres, p);
    const MultiplicityChainReport chain = multiplicity_chain_check(pres, p);

    auto& res = emit.results();
    res["dimension"] = pres.dimension();
    res["sigma_order"] = pres.sigma_order();
    res["char_poly_indices"] = cert.char_poly_indices.indices;
    res["eps"] = cert.eps_used;
    res["eigenspace_rank"] = cert.eigenspace_rank;
    res["upper_bound"] = cert.upper_bound;
    Json factors = Json::array();
    for (const auto& f : chain.factors)
        factors.push_back({{"index", f.index},
                           {"multiplicity", f.multiplicity},
                           {"phi_index", f.phi_index},
                           {"within_bound", f.within_bound}});
    res["factors"] = std::move(factors);
    res["total_multiplicity"] = chain.total_multiplicity;
    Json per_eps = Json::array();
    for (const auto& row : chain.per_epsilon)
        per_eps.push_back({{"eps", row.eps},
                           {"char_poly_multiplicity", row.char_poly_multiplicity},
                           {"eigenspace_dim", row.eigenspace_dim}});
    res["per_epsilon"] = std::move(per_eps);
    res["failures"] = chain.failures;

    auto& txt = emit.text();
    txt << "torus of dimension " << pres.dimension() << ", sigma of order " << pres.sigma_order()
        << ", char poly indices {" << join(cert.char_poly_indices.indices) << "}\n"
        << "p = " << p.value() << ", t = " << t << ", phi(t) = " << chain.phi_t << ", eps = " << cert.eps_used
        << '\n'
        << std::setw(8) << "d_i" << std::setw(10) << "phi(d_i)" << std::setw(14) << "mult(eps)" << std::setw(8)
        << "ok" << '\n';
    for (const auto& f : chain.factors)
        txt << std::setw(8) << f.index << std::setw(10) << f.phi_index << std::setw(14) << f.multiplicity
            << std::setw(8) << (f.within_bound ? "yes" : "no") << '\n';
    txt << "multiplicity in F mod p: " << chain.total_multiplicity << '\n'
        << "eigenspace rank:         " << cert.eigenspace_rank << '\n'
        << "bound floor(d/phi(t)):   " << cert.upper_bound << '\n'
        << std::setw(8) << "eps" << std::setw(14) << "mult" << std::setw(14) << "eigenspace" << '\n';
    for (const auto& row : chain.per_epsilon)
        txt << std::setw(8) << row.eps << std::setw(14) << row.char_poly_multiplicity << std::setw(14)
            << row.eigenspace_dim << '\n';
    for (const auto& f : chain.failures)
        txt << "violated: " << f << '\n';
    return emit.finish(chain.pass());
}

int cmd_oracle_file(const Options& opt, Emitter& emit)
{
    const TorusFile file = load_torus(opt);
    if (opt.q && file.q && *opt.q != *file.q)
        throw UsageError("--q disagrees with q in " + opt.file);
    const std::uint64_t q = opt.q ? *opt.q : require(file.q, "q (file) or --q");
    std::vector<std::uint64_t> prime_values;
    if (opt.p)
        prime_values = {*opt.p};
    else if (!opt.primes.empty())
        prime_values = parse_list(opt.primes);
    else
        prime_values = {2, 3, 5, 7, 11, 13};
    const auto primes = to_primes(prime_values);
    emit.inputs()["file"] = opt.file;
    emit.inputs()["q"] = q;
    emit.inputs()["primes"] = prime_values;
    emit.inputs()["sigma"] = to_json(file.sigma);

    const FiniteFieldTorus tor(q, file.sigma);
    const AbelianGroupInvariants group = rational_points_structure(tor);
    const mpz_class order = group_order(tor);
    const IntegerMatrix shift = tor.frobenius_shift();
    const std::uint64_t d = tor.dimension();

    auto& res = emit.results();
    res["invariants"] = to_json(group.invariants);
    res["group_order"] = to_json(order);
    auto& txt = emit.text();
    txt << "T(F_" << q << ") = " << group.to_string() << ", order " << order.get_str() << '\n'
        << std::setw(6) << "p" << std::setw(6) << "t" << std::setw(8) << "rank" << std::setw(8) << "kernel"
        << std::setw(8) << "bound" << '\n';

    std::vector<std::string> failures;
    if (group.order() != order)
        failures.push_back("product of invariant factors differs from |det(q sigma - I)|");
    Json rows = Json::array();
    for (const auto& p : primes) {
        if (q % p.value() == 0) {
            if (opt.p)
                throw DomainError("p = " + std::to_string(p.value()) + " divides q = " + std::to_string(q));
            continue;
        }
        const std::uint64_t t = t_of_finite_field(q, p);
        const std::uint64_t rank = p_elementary_rank(group, p);
        const std::uint64_t kernel = kernel_dim_mod_p(shift, p);
        const std::uint64_t bound = theorem_bound(d, t);
        rows.push_back({{"p", p.value()}, {"t", t}, {"rank", rank}, {"kernel_dim", kernel}, {"bound", bound}});
        txt << std::setw(6) << p.value() << std::setw(6) << t << std::setw(8) << rank << std::setw(8) << kernel
            << std::setw(8) << bound << '\n';
        if (rank != kernel)
            failures.push_back("equivalence violated at p = " + std::to_string(p.value()));
        if (rank > bound)
            failures.push_back("bound violated at p = " + std::to_string(p.value()));
    }
    res["per_prime"] = std::move(rows);
    res["failures"] = failures;
    for (const auto& f : failures)
        txt << "violated: " << f << '\n';
    return emit.finish(failures.empty());
}

int cmd_oracle(const Options& opt, Emitter& emit)
{
    if (!opt.file.empty())
        return cmd_oracle_file(opt, emit);

    OracleSweepConfig config;
    config.seed = opt.seed;
    if (opt.d)
        config.max_dimension = *opt.d;
    if (!opt.primes.empty())
        config.primes = parse_list(opt.primes);
    else if (opt.p)
        config.primes = {*opt.p};
    if (opt.q)
        config.field_sizes = {*opt.q};
    if (config.max_dimension == 0)
        throw UsageError("--d must be at least 1");
    to_primes(config.primes);

    emit.inputs()["seed"] = config.seed;
    emit.inputs()["tori"] = config.tori;
    emit.inputs()["max_dimension"] = config.max_dimension;
    emit.inputs()["field_sizes"] = config.field_sizes;
    emit.inputs()["primes"] = config.primes;

    const OracleSweepReport report = oracle_sweep(config);
    auto& res = emit.results();
    res["tori"] = report.tori;
    res["cases"] = report.cases;
    res["max_rank_seen"] = report.max_rank_seen;
    Json bad = Json::array();
    for (const auto& v : report.violations)
        bad.push_back({{"torus", v.torus_index},
                       {"q", v.q},
                       {"p", v.p},
                       {"sigma", v.sigma},
                       {"check", v.check},
                       {"detail", v.detail}});
    res["violations"] = std::move(bad);

    auto& txt = emit.text();
    txt << "finite-field oracle sweep, seed " << config.seed << '\n'
        << std::left << std::setw(20) << "  tori" << report.tori << '\n'
        << std::setw(20) << "  (q, p) cases" << report.cases << '\n'
        << std::setw(20) << "  max p-rank seen" << report.max_rank_seen << '\n'
        << std::setw(20) << "  violations" << report.violations.size() << '\n'
        << std::right;
    for (const auto& v : report.violations)
        txt << "  violated " << v.check << " torus #" << v.torus_index << " q=" << v.q << " p=" << v.p
            << " sigma=" << v.sigma << ": " << v.detail << '\n';
    return emit.finish(report.pass());
}

int cmd_sharpness(const Options& opt, Emitter& emit)
{
    std::vector<std::uint64_t> orders{1, 2, 3, 4, 6};
    if (opt.t)
        orders = {*opt.t};
    std::uint64_t max_d = opt.d.value_or(6);
    if (!opt.file.empty()) {
        const TorusFile file = load_torus(opt);
        if (!opt.t && file.chi_order)
            orders = {*file.chi_order};
        if (!opt.d)
            max_d = file.sigma.dimension();
    }
    for (std::uint64_t t : orders) {
        if (t == 0)
            throw DomainError("t must be at least 1");
        if (euler_phi(t) > max_d)
            throw DomainError("phi(" + std::to_string(t) + ") = " + std::to_string(euler_phi(t)) +
                              " exceeds d = " + std::to_string(max_d) + "; the bound is 0 and has no witness");
    }
    emit.inputs()["orders"] = orders;
    emit.inputs()["max_dimension"] = max_d;

    const SharpnessReport report = sharpness_sweep(orders, max_d);
    Json rows = Json::array();
    auto& txt = emit.text();
    txt << std::setw(4) << "t" << std::setw(4) << "d" << std::setw(7) << "bound" << std::setw(14) << "primes"
        << std::setw(12) << "ranks" << std::setw(5) << "q" << std::setw(8) << "oracle" << "  T(F_q)\n";
    for (const auto& row : report.rows) {
        rows.push_back({{"t", row.t},
                        {"d", row.d},
                        {"bound", row.bound},
                        {"primes", row.primes},
                        {"fixed_point_ranks", row.fixed_point_ranks},
                        {"oracle_p", row.oracle_p},
                        {"oracle_q", row.oracle_q},
                        {"oracle_rank", row.oracle_rank},
                        {"group", row.group},
                        {"attained", row.attained}});
        txt << std::setw(4) << row.t << std::setw(4) << row.d << std::setw(7) << row.bound << std::setw(14)
            << join(row.primes) << std::setw(12) << join(row.fixed_point_ranks) << std::setw(5) << row.oracle_q
            << std::setw(8) << row.oracle_rank << "  " << row.group << (row.attained ? "" : "  GAP") << '\n';
    }
    emit.results()["rows"] = std::move(rows);
    return emit.finish(report.pass());
}

int cmd_weyl_audit(const Options& opt, Emitter& emit)
{
    const PrimeModulus p(opt.p.value_or(3));
    emit.inputs()["p"] = p.value();
    const WeylAuditReport report = audit_pgl4(p);

    auto& res = emit.results();
    Json rows = Json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"element", row.cycles},
                        {"char_poly", row.char_poly},
                        {"indices", row.factorization.indices},
                        {"order", row.order},
                        {"minus_one_multiplicity", row.minus_one_multiplicity}});
    res["elements"] = std::move(rows);
    res["indices_within_1_to_4"] = report.indices_within_1_to_4;
    res["indices_divide_invariant_degrees"] = report.indices_divide_invariant_degrees;
    res["contains_minus_identity"] = report.contains_minus_identity;
    res["contains_minus_one_cubed"] = report.contains_minus_one_cubed;
    res["homomorphism"] = report.homomorphism;
    res["max_minus_one_multiplicity"] = report.max_minus_one_multiplicity;
    res["failures"] = report.failures;

    auto& txt = emit.text();
    txt << std::left << std::setw(14) << "element" << std::setw(28) << "char poly" << std::setw(12) << "indices"
        << std::setw(7) << "order" << "mult(-1 mod " << p.value() << ")\n";
    for (const auto& row : report.rows)
        txt << std::setw(14) << row.cycles << std::setw(28) << row.char_poly << std::setw(12)
            << join(row.factorization.indices) << std::setw(7) << row.order << row.minus_one_multiplicity << '\n';
    txt << std::right << "elements: " << report.rows.size() << ", -I present: "
        << (report.contains_minus_identity ? "yes" : "no")
        << ", (X+1)^3 present: " << (report.contains_minus_one_cubed ? "yes" : "no")
        << ", max multiplicity of -1: " << report.max_minus_one_multiplicity << '\n';
    for (const auto& f : report.failures)
        txt << "violated: " << f << '\n';
    return emit.finish(report.pass());
}

} // namespace

std::vector<std::uint64_t> parse_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
        out.push_back(std::stoull(item));
    }
    if (out.empty())
        throw UsageError("empty integer list");
    return out;
}

TorusFile parse_torus_document(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed torus document: ") + e.what());
    }
    if (!doc.is_object())
        throw UsageError("torus document must be a JSON object");

    auto read_positive = [](const Json& value, const std::string& key) -> std::uint64_t {
        if (!value.is_number_integer() || value.get<long long>() < 1)
            throw UsageError("'" + key + "' must be a positive integer");
        return value.get<std::uint64_t>();
    };

    TorusFile out;
    bool has_sigma = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "dimension") {
            out.dimension = read_positive(value, key);
        } else if (key == "q") {
            out.q = read_positive(value, key);
        } else if (key == "chi_order") {
            out.chi_order = read_positive(value, key);
        } else if (key == "sigma") {
            if (!value.is_array() || value.empty())
                throw UsageError("'sigma' must be a nonempty array of rows");
            std::vector<std::vector<long long>> rows;
            for (const auto& row : value) {
                if (!row.is_array())
                    throw UsageError("each row of 'sigma' must be an array");
                std::vector<long long> entries;
                for (const auto& entry : row) {
                    if (!entry.is_number_integer())
                        throw UsageError("entries of 'sigma' must be integers");
                    entries.push_back(entry.get<long long>());
                }
                if (entries.size() != value.size())
                    throw UsageError("'sigma' must be square");
                rows.push_back(std::move(entries));
            }
            out.sigma = IntegerMatrix::from_rows(rows);
            has_sigma = true;
        } else {
            throw UsageError("unknown field '" + key + "' in torus document");
        }
    }
    if (!has_sigma)
        throw UsageError("torus document lacks 'sigma'");
    if (out.dimension && *out.dimension != out.sigma.dimension())
        throw UsageError("'dimension' is " + std::to_string(*out.dimension) + " but sigma is " +
                         std::to_string(out.sigma.dimension()) + "x" + std::to_string(out.sigma.dimension()));
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of p-elementary rank bounds for tori and the plane Cremona group",
                 "cremona-cli"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* cyclotomic = app.add_subcommand("cyclotomic", "Print Phi_n and, with --p, its reduction mod p");
    cyclotomic->add_option("--n", opt.n, "Cyclotomic index")->required();
    cyclotomic->add_option("--p", opt.p, "Prime for the reduction");
    add_format(cyclotomic);

    auto* lemma = app.add_subcommand("lemma", "Sweep root multiplicities of Phi_n mod p");
    lemma->add_option("--max-n", opt.max_n, "Largest n in the sweep");
    lemma->add_option("--primes", opt.primes, "Comma-separated primes");
    add_format(lemma);

    auto* bound = app.add_subcommand("bound", "Rank bound for p-elementary subgroups of Cr_2(k)");
    bound->add_option("--p", opt.p, "Prime")->required();
    bound->add_option("--t", opt.t, "Degree [k(zeta_p):k]");
    bound->add_option("--q", opt.q, "Finite field size, determines t");
    bound->add_option("--d", opt.d, "Also report floor(d/phi(t)) for a d-dimensional torus");
    add_format(bound);

    auto* torus = app.add_subcommand("torus-rank", "Fixed-point rank of a torus presentation at p");
    torus->add_option("--file", opt.file, "Torus document")->required();
    torus->add_option("--p", opt.p, "Prime")->required();
    torus->add_option("--t", opt.t, "Character order (overrides chi_order)");
    add_format(torus);

    auto* oracle = app.add_subcommand("oracle", "Finite-field oracle: one torus (--file) or a seeded sweep");
    oracle->add_option("--file", opt.file, "Finite-field torus document");
    oracle->add_option("--q", opt.q, "Field size");
    oracle->add_option("--p", opt.p, "Single prime");
    oracle->add_option("--primes", opt.primes, "Comma-separated primes");
    oracle->add_option("--d", opt.d, "Largest dimension in the sweep");
    oracle->add_option("--seed", opt.seed, "Sweep seed");
    add_format(oracle);

    auto* sharp = app.add_subcommand("sharpness", "Check that floor(d/phi(t)) is attained");
    sharp->add_option("--t", opt.t, "Single character order (default 1,2,3,4,6)");
    sharp->add_option("--d", opt.d, "Largest dimension (default 6)");
    sharp->add_option("--file", opt.file, "Torus document supplying chi_order and dimension");
    add_format(sharp);

    auto* weyl = app.add_subcommand("weyl-audit", "Audit the Weyl group of PGL_4");
    weyl->add_option("--p", opt.p, "Prime (default 3)");
    add_format(weyl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    Emitter emit(out, opt.format == "json", name);
    try {
        if (name == "cyclotomic")
            return cmd_cyclotomic(opt, emit);
        if (name == "lemma")
            return cmd_lemma(opt, emit);
        if (name == "bound")
            return cmd_bound(opt, emit);
        if (name == "torus-rank")
            return cmd_torus_rank(opt, emit);
        if (name == "oracle")
            return cmd_oracle(opt, emit);
        if (name == "sharpness")
            return cmd_sharpness(opt, emit);
        return cmd_weyl_audit(opt, emit);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << '\n';
        return kVerificationFailure;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"cremona-cli"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace cremona::cli
