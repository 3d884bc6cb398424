// Command-line workbench for F_q-linear sets: constructions, theorem
// verification sweeps and Redei-polynomial dumps with JSON/TSV reports.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "linset/enumeration.hpp"
#include "linset/linear_set.hpp"
#include "linset/redei.hpp"
#include "linset/sampling.hpp"
#include "linset/spread.hpp"

using json = nlohmann::ordered_json;
using namespace linset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long instance_cap() {
    if (const char* env = std::getenv("LINSET_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 10'000'000LL;
}

/// q = p^h with p prime; throws UsageError otherwise.
std::pair<int, int> factor_prime_power(long long q) {
    if (q < 2) throw UsageError("q must be a prime power >= 2");
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (static_cast<long long>(p) * p > q) { p = static_cast<int>(q); break; }
    }
    int h = 0;
    long long rest = q;
    while (rest % p == 0) { rest /= p; ++h; }
    if (rest != 1) throw UsageError("q must be a prime power");
    return {p, h};
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::unique_ptr<FieldCtx> make_ctx(long long q, int n, const std::string& modulus) {
    auto [p, h] = factor_prime_power(q);
    std::optional<std::vector<int>> mod;
    if (!modulus.empty()) mod = parse_int_list(modulus);
    return std::make_unique<FieldCtx>(p, h, n, mod);
}

/// Number of k-dim F_q-subspaces of an m-dim F_q-space (clamped).
long long gaussian_binomial(long long q, int m, int k, long long clamp) {
    if (k < 0 || k > m) return 0;
    long double num = 1.0L;
    for (int i = 0; i < k; ++i) {
        long double top = std::pow(static_cast<long double>(q), m - i) - 1;
        long double bot = std::pow(static_cast<long double>(q), i + 1) - 1;
        num *= top / bot;
        if (num > static_cast<long double>(clamp) * 2) return clamp * 2;
    }
    return static_cast<long long>(num + 0.5L);
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// The domain V used by sweep/redei commands: full space for k = n,
/// otherwise a trace-style kernel cut out by n-k basis elements.
Subspace default_domain(const FieldCtx& ctx, int k) {
    if (k < 1 || k > ctx.n()) throw UsageError("k must satisfy 1 <= k <= n");
    std::vector<FieldElem> alphas;
    for (int i = 1; i <= ctx.n() - k; ++i)
        alphas.push_back(ctx.from_code(ctx.qbasis_codes()[i]));
    return trace_kernel_subspace(ctx, alphas);
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const FieldElem& c : v) out.push_back(c.code());
    return out;
}

json subspace_to_json(const Subspace& s) {
    json out = json::array();
    for (const Vec& b : s.basis()) out.push_back(vec_to_json(b));
    return out;
}

json linpoly_to_json(const LinPoly& f) {
    json out = json::array();
    for (const FieldElem& c : f.coeffs()) out.push_back(c.code());
    return out;
}

json bipoly_to_json(const BiPoly& b) {
    json out = json::object();
    for (const auto& [e, c] : b.by_x_degree) {
        json ys = json::array();
        for (const FieldElem& y : c.coeffs()) ys.push_back(y.code());
        out[std::to_string(e)] = ys;
    }
    return out;
}

json weight_histogram(const std::vector<WeightedPoint>& pts) {
    std::map<int, int> hist;
    for (const auto& wp : pts) ++hist[wp.weight];
    json out = json::object();
    for (const auto& [w, c] : hist) out[std::to_string(w)] = c;
    return out;
}

json spectrum_to_json(const std::map<int, long>& spectrum) {
    json out = json::object();
    for (const auto& [sz, cnt] : spectrum) out[std::to_string(sz)] = cnt;
    return out;
}

void emit(const json& report, const std::string& format,
          const std::vector<std::string>& tsv_columns) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // TSV: one row per instance (or a single row when there is none)
    for (std::size_t i = 0; i < tsv_columns.size(); ++i)
        std::cout << tsv_columns[i] << (i + 1 < tsv_columns.size() ? "\t" : "\n");
    auto print_row = [&](const json& row) {
        for (std::size_t i = 0; i < tsv_columns.size(); ++i) {
            const json& cell = row.contains(tsv_columns[i]) ? row[tsv_columns[i]] : json();
            if (cell.is_string())
                std::cout << cell.get<std::string>();
            else
                std::cout << cell.dump();
            std::cout << (i + 1 < tsv_columns.size() ? "\t" : "\n");
        }
    };
    if (report.contains("instances"))
        for (const json& row : report["instances"]) print_row(row);
    else
        print_row(report);
}

// ---------------------------------------------------------------- verify-line

/// All theorem checks for one (V, f) instance on the projective line.
json line_instance(const FieldCtx& ctx, const Subspace& v, const LinPoly& f, int index) {
    const int k = v.dim();
    LinearSetSpec spec = from_graph(v, f);
    auto pts = points(spec);
    LineReport rep = verify_line_bound(spec);
    DirectionSet dirs = directions(v, f);

    std::vector<AffinePoint> affine;
    for (const Vec& x : v.enumerate()) affine.push_back({x[0], f.eval(x[0])});
    RedeiPoly r = redei_build(ctx, affine);
    DivisionResult dr = divide_xqn(r);
    auto [degh_pow, degh_exp] = degh_is_q_power(r, dr);

    long vectors = 0;
    for (const auto& wp : pts) vectors += ipow(ctx.q(), wp.weight) - 1;

    json checks = json::object();
    checks["line_bound"] = rep.bound_ok;
    checks["congruence_mod_q"] = rep.congruence_ok;
    checks["direction_count_equals_size"] = dirs.size() == pts.size();
    checks["weight_partition"] = vectors == ipow(ctx.q(), k) - 1;
    checks["redei_shape"] = check_shape(r, k);
    checks["degree_ledger"] = dr.degree_ledger_ok(r.size());
    checks["degh_q_power"] = degh_pow;
    checks["size_ge_degh"] = static_cast<long>(pts.size()) >= dr.degx_h;
    checks["degh_tight_with_weight_one"] =
        !rep.has_weight_one || dr.degx_h == ipow(ctx.q(), k - 1);

    bool pass = true;
    for (const auto& [key, val] : checks.items()) pass = pass && val.get<bool>();

    json row = json::object();
    row["index"] = index;
    row["v_basis"] = [&] {
        json b = json::array();
        for (const Vec& bv : v.basis()) b.push_back(bv[0].code());
        return b;
    }();
    row["f_coeffs"] = linpoly_to_json(f);
    row["size"] = pts.size();
    row["directions"] = dirs.size();
    row["weights"] = weight_histogram(pts);
    row["degx_h"] = dr.degx_h;
    row["checks"] = checks;
    row["pass"] = pass;
    return row;
}

int cmd_verify_line(long long q, int n, int k, const std::string& modulus, bool exhaustive,
                    long long random_count, std::optional<long long> seed,
                    const std::string& format) {
    auto ctx = make_ctx(q, n, modulus);
    if (k < 1 || k > n) throw UsageError("k must satisfy 1 <= k <= n");
    auto start = std::chrono::steady_clock::now();
    json report = json::object();
    report["command"] = "verify-line";
    report["parameters"] = {{"q", q}, {"n", n}, {"k", k},
                            {"mode", exhaustive ? "exhaustive" : "random"}};
    json instances = json::array();
    int index = 0;
    long failures = 0;

    auto run = [&](const Subspace& v, const LinPoly& f) {
        json row = line_instance(*ctx, v, f, index++);
        if (!row["pass"].get<bool>()) ++failures;
        instances.push_back(std::move(row));
    };

    if (exhaustive) {
        long long count = gaussian_binomial(q, n, k, instance_cap()) *
                          ipow(static_cast<long long>(ctx->order()), k);
        if (count > instance_cap()) throw CapExceeded("exhaustive grid exceeds the instance cap");
        for (const Subspace& v : all_subspaces(*ctx, k))
            for (const LinPoly& f : all_linear_maps(v)) run(v, f);
    } else {
        if (!seed) throw UsageError("--random requires --seed");
        if (random_count > instance_cap()) throw CapExceeded("random count exceeds the instance cap");
        report["parameters"]["seed"] = *seed;
        report["parameters"]["count"] = random_count;
        std::mt19937_64 rng(static_cast<std::uint64_t>(*seed));
        std::uniform_int_distribution<std::uint32_t> dist(0, ctx->order() - 1);
        for (long long i = 0; i < random_count; ++i) {
            Subspace v = random_subspace(*ctx, k, rng);
            std::vector<FieldElem> xs, vals;
            for (const Vec& b : v.basis()) xs.push_back(b[0]);
            for (int j = 0; j < k; ++j) vals.push_back(ctx->from_code(dist(rng)));
            run(v, interpolate_linpoly(*ctx, xs, vals));
        }
    }

    report["instances"] = std::move(instances);
    report["aggregate"] = {{"instances", index}, {"failures", failures}};
    report["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    emit(report, format, {"index", "size", "directions", "degx_h", "pass"});
    return failures == 0 ? kExitOk : kExitViolation;
}

// --------------------------------------------------------------- verify-plane

json plane_instance(const FieldCtx& ctx, const Subspace& mu, int index) {
    LinearSetSpec spec = from_subspace(mu);
    auto pts = points(spec);
    PlaneReport rep = verify_plane_bound(spec);
    auto spectrum = secant_spectrum(spec);

    json row = json::object();
    row["index"] = index;
    row["rank"] = mu.dim();
    row["size"] = rep.size;
    row["spectrum"] = spectrum_to_json(spectrum);
    row["has_q_plus_1_secant"] = rep.has_q_plus_1_secant;
    row["bound"] = rep.bound;
    row["e_modulus"] = max_linearity_modulus(ctx, spectrum);
    row["weights"] = weight_histogram(pts);
    if (mu.dim() == ctx.n() && ctx.order() <= 64) {
        std::vector<ProjPoint> plist;
        for (const auto& wp : pts) plist.push_back(wp.point);
        BlockingReport br = is_blocking_set(ctx, plist);
        row["blocking"] = br.blocking;
        row["blocking_trivial"] = br.trivial;
        row["blocking_small"] = br.small;
    }
    json checks = json::object();
    checks["plane_bound"] = rep.bound_ok;
    checks["congruence_mod_q"] = rep.congruence_ok;
    row["checks"] = checks;
    row["pass"] = rep.pass;
    return row;
}

int cmd_verify_plane(long long q, int n, int k, const std::string& modulus,
                     const std::string& construct, long long random_count,
                     std::optional<long long> seed, const std::string& format) {
    auto start = std::chrono::steady_clock::now();
    json report = json::object();
    report["command"] = "verify-plane";
    json instances = json::array();
    long failures = 0;
    int index = 0;

    std::unique_ptr<FieldCtx> ctx;
    if (construct == "subplane") {
        if (n != 0 && n != 4) throw UsageError("the subplane construction requires n = 4");
        ctx = make_ctx(q, 4, modulus);
        instances.push_back(plane_instance(*ctx, construct_subplane(*ctx), index++));
    } else if (construct == "ambetant") {
        if (n != 0 && n != 9) throw UsageError("this construction requires n = 9");
        ctx = make_ctx(q, 9, modulus);
        instances.push_back(plane_instance(*ctx, construct_ambetant(*ctx), index++));
    } else if (construct == "vbvlak") {
        if (n == 0) throw UsageError("--n is required");
        ctx = make_ctx(q, n, modulus);
        instances.push_back(plane_instance(*ctx, construct_vbvlak(*ctx, k), index++));
    } else if (construct.empty()) {
        if (n == 0) throw UsageError("--n is required");
        if (!seed) throw UsageError("--random requires --seed");
        if (random_count > instance_cap()) throw CapExceeded("random count exceeds the instance cap");
        ctx = make_ctx(q, n, modulus);
        std::mt19937_64 rng(static_cast<std::uint64_t>(*seed));
        for (long long i = 0; i < random_count; ++i)
            instances.push_back(plane_instance(*ctx, random_subspace_r(*ctx, 3, k, rng), index++));
    } else {
        throw UsageError("unknown construction: " + construct);
    }

    for (const json& row : instances)
        if (!row["pass"].get<bool>()) ++failures;

    report["parameters"] = {{"q", q}, {"n", ctx->n()}, {"k", k}, {"construct", construct}};
    if (seed) report["parameters"]["seed"] = *seed;
    report["instances"] = std::move(instances);
    report["aggregate"] = {{"instances", index}, {"failures", failures}};
    report["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    emit(report, format, {"index", "rank", "size", "bound", "e_modulus", "pass"});
    return failures == 0 ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ construct

int cmd_construct(long long q, int n, int k, const std::string& modulus,
                  const std::string& type, const std::string& format) {
    std::unique_ptr<FieldCtx> ctx;
    Subspace mu;
    if (type == "vbtrace") {
        if (n == 0) throw UsageError("--n is required");
        ctx = make_ctx(q, n, modulus);
        mu = construct_vbtrace(*ctx, k);
    } else if (type == "vbvlak") {
        if (n == 0) throw UsageError("--n is required");
        ctx = make_ctx(q, n, modulus);
        mu = construct_vbvlak(*ctx, k);
    } else if (type == "subplane") {
        ctx = make_ctx(q, 4, modulus);
        mu = construct_subplane(*ctx);
    } else if (type == "ambetant") {
        ctx = make_ctx(q, 9, modulus);
        mu = construct_ambetant(*ctx);
    } else {
        throw UsageError("unknown construction type: " + type);
    }
    auto pts = points(from_subspace(mu));
    json report = json::object();
    report["command"] = "construct";
    report["parameters"] = {{"q", q}, {"n", ctx->n()}, {"k", k}, {"type", type}};
    report["arity"] = mu.arity();
    report["rank"] = mu.dim();
    report["basis"] = subspace_to_json(mu);
    report["size"] = pts.size();
    report["weights"] = weight_histogram(pts);
    emit(report, format, {"rank", "size"});
    return kExitOk;
}

// ---------------------------------------------------------------------- redei

int cmd_redei(long long q, int n, int k, const std::string& modulus, bool use_trace,
              const std::string& map_coeffs, const std::string& format) {
    if (n == 0) throw UsageError("--n is required");
    auto ctx = make_ctx(q, n, modulus);
    Subspace v = default_domain(*ctx, k);
    LinPoly f;
    if (use_trace) {
        f = LinPoly::trace_poly(*ctx);
    } else if (!map_coeffs.empty()) {
        std::vector<FieldElem> cs;
        for (int c : parse_int_list(map_coeffs)) {
            if (c < 0 || static_cast<std::uint32_t>(c) >= ctx->order())
                throw UsageError("map coefficient out of range");
            cs.push_back(ctx->from_code(static_cast<std::uint32_t>(c)));
        }
        f = LinPoly(*ctx, std::move(cs));
    } else {
        throw UsageError("one of --trace or --map is required");
    }

    std::vector<AffinePoint> affine;
    for (const Vec& x : v.enumerate()) affine.push_back({x[0], f.eval(x[0])});
    RedeiPoly r = redei_build(*ctx, affine);
    DivisionResult dr = divide_xqn(r);
    auto [degh_pow, degh_exp] = degh_is_q_power(r, dr);
    auto pts = points(from_graph(v, f));

    json checks = json::object();
    checks["shape"] = check_shape(r, k);
    checks["degree_ledger"] = dr.degree_ledger_ok(r.size());
    checks["degh_q_power"] = degh_pow;
    checks["size_ge_degh"] = static_cast<long>(pts.size()) >= dr.degx_h;
    bool pass = true;
    for (const auto& [key, val] : checks.items()) pass = pass && val.get<bool>();

    json report = json::object();
    report["command"] = "redei";
    report["parameters"] = {{"q", q}, {"n", n}, {"k", k},
                            {"map", use_trace ? "trace" : map_coeffs}};
    report["R"] = bipoly_to_json(r.poly());
    report["Q"] = bipoly_to_json(dr.quotient);
    report["H"] = bipoly_to_json(dr.h);
    report["degx_h"] = dr.degx_h;
    report["i0"] = dr.min_nonzero_h_index;
    report["degh_exponent"] = degh_exp;
    report["size"] = pts.size();
    report["weights"] = weight_histogram(pts);
    report["checks"] = checks;
    report["pass"] = pass;
    emit(report, format, {"degx_h", "i0", "size", "pass"});
    return pass ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------------- explore

using PointSig = std::vector<std::uint64_t>;

PointSig point_signature(const std::vector<WeightedPoint>& pts) {
    PointSig sig;
    for (const auto& wp : pts) {
        std::uint64_t code = 0;
        for (const FieldElem& c : wp.point.coords())
            code = code * (1ULL << 22) + c.code();
        sig.push_back(code);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

/// Point-set signatures of every F_{q^i}-linear set of PG(1, q^n).  The
/// re-towered context shares the element encoding of `ctx` because the
/// default modulus depends only on p and the total degree h*n, so point
/// codes are directly comparable.
std::set<PointSig> subfield_linear_signatures(const FieldCtx& ctx, int i) {
    FieldCtx sub(ctx.p(), ctx.h() * i, ctx.n() / i);
    std::set<PointSig> sigs;
    for (int k = 1; k <= 2 * sub.n(); ++k)
        for (const Subspace& w : all_subspaces_r(sub, 2, k))
            sigs.insert(point_signature(points(from_subspace(w))));
    return sigs;
}

int cmd_explore(long long q, int n, int kmax, const std::string& modulus,
                const std::string& search, const std::string& format) {
    if (n == 0) throw UsageError("--n is required");
    auto ctx = make_ctx(q, n, modulus);
    auto start = std::chrono::steady_clock::now();
    json report = json::object();
    report["command"] = "explore";
    report["parameters"] = {{"q", q}, {"n", n}, {"k_max", kmax}, {"search", search}};
    json candidates = json::array();
    long scanned = 0;

    if (search == "all-weights-ge2") {
        // graphs whose linear set has only points of weight >= 2; report
        // whether each point set is itself a linear set over a larger
        // subfield F_{q^i}
        std::map<int, std::set<PointSig>> subfield_sigs;
        for (int i = 2; i <= n; ++i)
            if (n % i == 0) subfield_sigs.emplace(i, subfield_linear_signatures(*ctx, i));
        for (int k = 2; k <= kmax; ++k) {
            long long count = gaussian_binomial(q, n, k, instance_cap()) *
                              ipow(static_cast<long long>(ctx->order()), k);
            if (count > instance_cap()) throw CapExceeded("search grid exceeds the instance cap");
            for (const Subspace& v : all_subspaces(*ctx, k)) {
                for (const LinPoly& f : all_linear_maps(v)) {
                    ++scanned;
                    LinearSetSpec spec = from_graph(v, f);
                    auto pts = points(spec);
                    bool all_ge2 = !pts.empty();
                    for (const auto& wp : pts) all_ge2 = all_ge2 && wp.weight >= 2;
                    if (!all_ge2) continue;
                    PointSig sig = point_signature(pts);
                    json linear_over = json::array();
                    for (const auto& [i, sigs] : subfield_sigs)
                        if (sigs.count(sig)) linear_over.push_back(i);
                    json cand = json::object();
                    cand["k"] = k;
                    cand["v_basis"] = [&] {
                        json b = json::array();
                        for (const Vec& bv : v.basis()) b.push_back(bv[0].code());
                        return b;
                    }();
                    cand["f_coeffs"] = linpoly_to_json(f);
                    cand["size"] = pts.size();
                    cand["weights"] = weight_histogram(pts);
                    cand["linear_over_extension"] = linear_over;
                    cand["explained"] = !linear_over.empty();
                    candidates.push_back(std::move(cand));
                }
            }
        }
    } else if (search == "tangent-only") {
        // plane sets whose secant sizes are all 1 mod q yet with no
        // (q+1)-secant
        for (int k = 1; k <= kmax; ++k) {
            long long count = gaussian_binomial(q, 3 * n, k, instance_cap());
            if (count > instance_cap()) throw CapExceeded("search grid exceeds the instance cap");
            for (const Subspace& u : all_subspaces_r(*ctx, 3, k)) {
                ++scanned;
                auto pts = points(from_subspace(u));
                if (pts.size() < 2) continue;
                std::vector<ProjPoint> plist;
                for (const auto& wp : pts) plist.push_back(wp.point);
                auto spectrum = secant_spectrum(plist);
                bool all_one_mod_q = true;
                for (const auto& [sz, cnt] : spectrum)
                    all_one_mod_q = all_one_mod_q &&
                                    (sz % static_cast<int>(ctx->q())) == 1 % static_cast<int>(ctx->q());
                bool qp1 = spectrum.count(static_cast<int>(ctx->q()) + 1) > 0;
                if (!all_one_mod_q || qp1) continue;
                json cand = json::object();
                cand["k"] = k;
                cand["basis"] = subspace_to_json(u);
                cand["size"] = pts.size();
                cand["spectrum"] = spectrum_to_json(spectrum);
                candidates.push_back(std::move(cand));
            }
        }
    } else {
        throw UsageError("unknown search: " + search +
                         " (expected all-weights-ge2 or tangent-only)");
    }

    report["scanned"] = scanned;
    report["candidates"] = candidates;
    report["outcome"] =
        candidates.empty() ? "none found in search space" : "candidates listed (not a proof)";
    report["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    emit(report, format, {"scanned", "outcome"});
    return kExitOk;
}

// ---------------------------------------------------------------- fields-info

int cmd_fields_info(long long q, int n, const std::string& modulus, const std::string& format) {
    if (n == 0) throw UsageError("--n is required");
    auto ctx = make_ctx(q, n, modulus);
    json report = json::object();
    report["command"] = "fields-info";
    report["p"] = ctx->p();
    report["h"] = ctx->h();
    report["q"] = ctx->q();
    report["n"] = ctx->n();
    report["order"] = ctx->order();
    report["modulus"] = ctx->modulus();
    report["q_basis"] = ctx->qbasis_codes();
    if (ctx->q() <= 64)
        report["subfield"] = ctx->subfield_codes();
    else
        report["subfield_size"] = ctx->q();
    emit(report, format, {"p", "h", "q", "n", "order"});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-geometry workbench for F_q-linear sets"};
    app.require_subcommand(1);

    long long q = 0;
    int n = 0, k = 0, r = 3;
    long long random_count = 0;
    std::optional<long long> seed;
    bool exhaustive = false, use_trace = false;
    std::string format = "json", modulus, construct_type, map_coeffs, search;

    auto add_common = [&](CLI::App* cmd, bool needs_q) {
        auto* qopt = cmd->add_option("--q", q, "subfield order (prime power)");
        if (needs_q) qopt->required();
        cmd->add_option("--n", n, "extension degree");
        cmd->add_option("--k", k, "rank");
        cmd->add_option("--r", r, "projective arity");
        cmd->add_option("--seed", seed, "PRNG seed (required for --random)");
        cmd->add_option("--random", random_count, "number of random instances");
        cmd->add_flag("--exhaustive", exhaustive, "sweep the full grid");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "tsv"}));
        cmd->add_option("--modulus", modulus, "modulus coefficients c0,c1,...,cd over F_p");
    };

    auto* vline = app.add_subcommand("verify-line", "line-case theorem checks over (V, f) grids");
    add_common(vline, true);
    auto* vplane = app.add_subcommand("verify-plane", "plane-case bound and spectrum checks");
    add_common(vplane, true);
    vplane->add_option("--construct", construct_type, "vbvlak | subplane | ambetant");
    auto* redei = app.add_subcommand("redei", "Redei-polynomial division dump for one (V, f)");
    add_common(redei, true);
    redei->add_flag("--trace", use_trace, "use the trace map");
    redei->add_option("--map", map_coeffs, "linearized-map coefficients c0,c1,...");
    auto* construct = app.add_subcommand("construct", "emit an explicit construction");
    add_common(construct, true);
    construct->add_option("--type", construct_type, "vbtrace | vbvlak | subplane | ambetant")
        ->required();
    auto* explore = app.add_subcommand("explore", "open-question searches (report only)");
    add_common(explore, true);
    explore->add_option("--search", search, "all-weights-ge2 | tangent-only")->required();
    auto* finfo = app.add_subcommand("fields-info", "print field-tower parameters");
    add_common(finfo, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (vline->parsed())
            return cmd_verify_line(q, n, k, modulus, exhaustive || random_count == 0,
                                   random_count, seed, format);
        if (vplane->parsed())
            return cmd_verify_plane(q, n, k, modulus, construct_type, random_count, seed, format);
        if (redei->parsed()) return cmd_redei(q, n, k, modulus, use_trace, map_coeffs, format);
        if (construct->parsed()) return cmd_construct(q, n, k, modulus, construct_type, format);
        if (explore->parsed()) return cmd_explore(q, n, k, modulus, search, format);
        if (finfo->parsed()) return cmd_fields_info(q, n, modulus, format);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
