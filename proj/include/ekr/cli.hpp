#pragma once

// Command-line front end. Every subcommand produces a versioned JSON report
// (or a short text rendering with --text) and an exit code:
//   0 all checks pass, 1 a check failed, 2 usage or malformed input,
//   3 degree out of range, 4 unsupported construction, 5 file I/O failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekr/ekrverify.hpp"

namespace ekr::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ekr-report/1";

enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, out_of_range = 3, unsupported = 4, io_error = 5 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    bool pass = false;
};

struct Outcome {
    json parameters = json::object();
    json result = json::object();
    std::vector<Check> checks;
    std::vector<std::string> lines;  // --text summary

    void check(std::string name, bool pass) { checks.push_back({std::move(name), pass}); }
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

inline std::string str(const Rational& q) { return to_string(q); }
inline std::string str(const BigInt& v) { return v.str(); }

inline json perm_list(const std::vector<Permutation>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(to_one_line(p));
    return a;
}

inline json partition_list(const std::vector<IntegerPartition>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

inline json rational_list(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(str(x));
    return a;
}

inline void require_range(const char* what, int n, int lo, int hi) {
    if (n < lo || n > hi)
        throw DegreeError(std::string(what) + ": n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] (got " + std::to_string(n) + ")");
}

// -- subcommands -----------------------------------------------------------

inline Outcome cmd_derangements(int n) {
    require_range("derangements", n, 1, 1000);
    Outcome o;
    o.parameters = {{"n", n}};
    const BigInt d = derangement_count(n);
    o.result = {{"d", str(d)}};
    if (n <= 20) {
        BigInt by_class = 0;
        for (const auto& c : classes_of(n))
            if (c.cycle_type.is_derangement_class()) by_class += c.size;
        o.result["sum_of_derangement_class_sizes"] = str(by_class);
        o.check("recursion equals sum of derangement class sizes", by_class == d);
    }
    o.lines.push_back("d(" + std::to_string(n) + ") = " + str(d));
    return o;
}

struct OrthogonalityReport {
    bool rows = true, columns = true, standard = true;
};

inline OrthogonalityReport orthogonality(const CharacterTable& t) {
    OrthogonalityReport r;
    const auto classes = classes_of(t.n);
    const BigInt order = factorial(static_cast<unsigned>(t.n));
    const std::size_t k = t.partitions.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            BigInt s = 0;
            for (std::size_t c = 0; c < k; ++c) s += classes[c].size * t.at(a, c) * t.at(b, c);
            r.rows = r.rows && s == (a == b ? order : BigInt(0));
        }
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t e = c; e < k; ++e) {
            BigInt s = 0;
            for (std::size_t a = 0; a < k; ++a) s += t.at(a, c) * t.at(a, e);
            r.columns = r.columns && s == (c == e ? order / classes[c].size : BigInt(0));
        }
    if (t.n >= 2) {
        const auto row = t.row_of(IntegerPartition({t.n - 1, 1}));
        for (std::size_t c = 0; c < k; ++c) r.standard = r.standard && t.at(row, c) == t.cycle_types[c].fixed_points() - 1;
    }
    return r;
}

inline Outcome cmd_chartab(int n, bool csv, std::string* csv_out) {
    require_character_degree(n);
    Outcome o;
    o.parameters = {{"n", n}, {"csv", csv}};
    const auto t = character_table(n);
    if (csv && csv_out) {
        std::ostringstream os;
        write_csv(os, t);
        *csv_out = os.str();
    }
    json cols = json::array();
    for (const auto& mu : t.cycle_types) cols.push_back(mu.str());
    json rows = json::array();
    for (std::size_t i = 0; i < t.partitions.size(); ++i) {
        json vals = json::array();
        for (const auto& v : t.values[i]) vals.push_back(str(v));
        rows.push_back({{"lambda", t.partitions[i].str()}, {"values", vals}});
    }
    o.result = {{"cycle_types", cols}, {"rows", rows}};
    const auto orth = orthogonality(t);
    o.check("row orthogonality", orth.rows);
    o.check("column orthogonality", orth.columns);
    o.check("standard character equals fixed points minus one", orth.standard);
    o.lines.push_back(std::to_string(t.partitions.size()) + " irreducible characters of S(" + std::to_string(n) + ")");
    return o;
}

inline Outcome cmd_spectrum(int n, int t) {
    require_range("spectrum", n, 2, kMaxCharacterDegree);
    Outcome o;
    o.parameters = {{"n", n}, {"t", t}};
    const auto s = union_spectrum(n, t);
    json evs = json::array();
    for (std::size_t i = 0; i < s.partitions.size(); ++i) {
        evs.push_back({{"partition", s.partitions[i].str()},
                       {"eigenvalue", str(s.eigenvalues[i])},
                       {"multiplicity", str(s.multiplicities[i])}});
        o.lines.push_back(s.partitions[i].str() + ": " + str(s.eigenvalues[i]));
    }
    const auto least = least_eigenvalue(s);
    o.result = {{"valency", str(s.valency)},
                {"eigenvalues", evs},
                {"least", {{"value", str(least.value)}, {"achieved_by", partition_list(least.achieved_by)}}}};
    if (t == 0) {
        const Rational d(derangement_count(n));
        o.check("eigenvalue on [n] is d(n)", s.eigenvalue(IntegerPartition({n})) == d);
        o.check("eigenvalue on [n-1,1] is -d(n)/(n-1)", s.eigenvalue(IntegerPartition({n - 1, 1})) == -d / (n - 1));
    }
    BigInt total = 0;
    for (const auto& m : s.multiplicities) total += m;
    o.check("multiplicities sum to n!", total == factorial(static_cast<unsigned>(n)));
    return o;
}

/// S_A with A = {(1,1), …, (t+1,t+1)}.
inline Family diagonal_family(int n, int t) {
    std::vector<std::pair<int, int>> a;
    for (int i = 1; i <= t + 1; ++i) a.emplace_back(i, i);
    return family(n, a);
}

inline CliqueCertificate bounding_clique(int n, int t) {
    if (t == 0) return latin_clique(n);
    if (t == 1) return affine_clique(n);
    throw UnsupportedConstruction("bounds: no clique construction for t >= 2");
}

inline Outcome cmd_bounds(int n, int t) {
    require_range("bounds", n, 3, kMaxCharacterDegree);
    require_threshold(n, t);
    Outcome o;
    o.parameters = {{"n", n}, {"t", t}};
    const auto clique = bounding_clique(n, t);
    const BigInt fam_size = factorial(static_cast<unsigned>(n - t - 1));
    const BigInt v = factorial(static_cast<unsigned>(n));
    const BigInt product = BigInt(clique.members.size()) * fam_size;
    const Rational ratio = ratio_bound(n, t);
    o.result = {{"omega", clique.members.size()},
                {"clique", to_string(clique.construction)},
                {"independent_size", str(fam_size)},
                {"alpha_bound", str(ratio)},
                {"product", str(product)},
                {"bound", str(v)},
                {"tight", product == v}};
    o.check("clique validates", clique.validated);
    o.check("clique-coclique product at most n!", product <= v);
    o.check("canonical family within ratio bound", Rational(fam_size) <= ratio);
    if (n <= ConjugacyScheme::kMaxDegree) {
        const ConjugacyScheme scheme(n);
        const auto r = scheme.clique_coclique_check(clique.members, diagonal_family(n, t).members, t);
        json sup = json::array();
        for (const auto& s : r.supports)
            sup.push_back({{"partition", s.partition.str()}, {"clique", s.clique_nonzero}, {"independent", s.independent_nonzero}});
        o.result["supports"] = sup;
        o.result["supports_disjoint"] = r.supports_disjoint;
        if (r.tight) o.check("tight case has disjoint idempotent supports", r.supports_disjoint);
    }
    o.lines.push_back("omega = " + std::to_string(clique.members.size()) + ", alpha bound = " + str(ratio) +
                      ", product = " + str(product) + (product == v ? " (tight)" : ""));
    return o;
}

inline CliqueCertificate clique_by_method(int n, const std::string& method) {
    if (method == "latin") return latin_clique(n);
    if (method == "odd-latin") return odd_n_latin_clique(n);
    if (method == "cycles") return cycle_decomposition_clique(n);
    if (method == "affine") return affine_clique(n);
    throw InputError("clique: unknown method '" + method + "'");
}

inline Outcome cmd_clique(int n, const std::string& method) {
    require_range("clique", n, 1, 13);
    Outcome o;
    o.parameters = {{"n", n}, {"method", method}};
    const auto c = clique_by_method(n, method);
    o.result = {{"construction", to_string(c.construction)},
                {"t", c.t},
                {"size", c.members.size()},
                {"members", perm_list(c.members)}};
    o.check("pairwise agreements at most t", is_clique(c.members, c.t));
    if (c.t == 0) o.check("size equals n", static_cast<int>(c.members.size()) == n);
    if (c.t == 1) o.check("size equals n(n-1)", static_cast<int>(c.members.size()) == n * (n - 1));
    if (c.construction == CliqueConstruction::cycles)
        o.check("cycles decompose the complete digraph",
                is_hamiltonian_decomposition(std::vector<Permutation>(c.members.begin() + 1, c.members.end())));
    if (c.t == 0 && n >= 3 && n <= kMaxCharacterDegree) {
        json sums = json::array();
        bool nonzero = true, formula = true;
        const IntegerPartition standard({n - 1, 1});
        for (const auto& lambda : partitions_of(n)) {
            const BigInt s = character_sum(lambda, c.members);
            sums.push_back({{"partition", lambda.str()}, {"value", str(s)}});
            if (!(lambda == standard)) nonzero = nonzero && s != 0;
            if (c.construction == CliqueConstruction::cycles)
                formula = formula && s == dimension(lambda) + BigInt(n - 1) * n_cycle_character(lambda);
        }
        o.result["character_sums"] = sums;
        o.result["nonzero_off_standard"] = nonzero;
        if (c.construction == CliqueConstruction::cycles) o.check("character sums equal chi(1) + (n-1) chi(n-cycle)", formula);
    }
    o.lines.push_back(to_string(c.construction) + " clique of size " + std::to_string(c.members.size()));
    for (const auto& p : c.members) o.lines.push_back("  " + to_one_line(p));
    return o;
}

inline Outcome cmd_search(int n, int t, unsigned workers) {
    Outcome o;
    o.parameters = {{"n", n}, {"t", t}};
    const auto s = max_independent_sets(n, t, workers);
    json sets = json::array();
    bool all_independent = true, all_canonical = true;
    for (const auto& set : s.sets) {
        sets.push_back(perm_list(set));
        all_independent = all_independent && validate_family(set, t).valid;
        all_canonical = all_canonical && (t > 0 || match_point_stabiliser_coset(set).has_value());
    }
    o.result = {{"alpha", s.alpha}, {"omega", s.omega}, {"tight", s.tight}, {"count", s.sets.size()},
                {"nodes", s.nodes}, {"sets", sets}};
    o.check("every reported set is independent", all_independent);
    if (t == 0) {
        o.check("alpha equals (n-1)!", s.alpha == factorial_u64(static_cast<unsigned>(n - 1)));
        o.check("exactly n^2 maximum sets", s.sets.size() == static_cast<std::size_t>(n * n));
        o.check("every maximum set is a point-stabiliser coset", all_canonical);
    }
    o.lines.push_back("alpha = " + std::to_string(s.alpha) + ", omega = " + std::to_string(s.omega) + ", " +
                      std::to_string(s.sets.size()) + " maximum sets");
    return o;
}

inline Outcome cmd_classify(int n, unsigned workers) {
    Outcome o;
    o.parameters = {{"n", n}};
    const auto c = classify_maximum_sets(n, workers);
    json sets = json::array();
    for (const auto& s : c.sets) {
        json e = {{"members", perm_list(s.members)}, {"case", s.coordinate_case}};
        if (s.canonical) e["coset"] = {s.canonical->first, s.canonical->second};
        if (s.case1_point) e["point"] = *s.case1_point;
        if (s.c) {
            e["c"] = str(*s.c);
            e["coefficients"] = rational_list(s.coefficients);
        }
        sets.push_back(e);
    }
    o.result = {{"alpha", c.alpha}, {"count", c.count}, {"sets", sets}};
    o.check("exactly n^2 maximum sets", c.count == static_cast<std::size_t>(n * n));
    o.check("every maximum set equals some S_{i,j}", c.all_canonical);
    o.check("classification invariant under translation", c.translation_invariant);
    o.check("coordinates of identity translates follow the two cases", c.coordinates_consistent);
    o.lines.push_back(std::to_string(c.count) + " maximum sets of size " + std::to_string(c.alpha));
    return o;
}

inline json lemma(const char* name, int n, bool pass, json details) {
    return {{"lemma", name}, {"n", n}, {"pass", pass}, {"details", std::move(details)}};
}

inline json matrix_rows(const Matrix<int>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string bits;
        for (std::size_t c = 0; c < m.cols(); ++c) bits += static_cast<char>('0' + m(r, c));
        rows.push_back(bits);
    }
    return rows;
}

inline Outcome cmd_lemmas(int n, std::uint64_t seed, const std::string& matrix_out) {
    require_incidence_degree(n);
    Outcome o;
    o.parameters = {{"n", n}, {"seed", seed}};
    const ConjugacyScheme scheme(n);
    const auto& group = scheme.group();
    const auto h = build_H(group);
    if (!matrix_out.empty()) {
        std::ofstream f(matrix_out);
        if (!f) throw IoError("cannot open '" + matrix_out + "' for writing");
        write_matrix(f, h.entries);
        if (!f) throw IoError("failed writing '" + matrix_out + "'");
    }
    const auto sq = static_cast<std::size_t>((n - 1) * (n - 1));
    json lemmas = json::array();
    auto add = [&](const char* name, bool pass, json details) {
        o.check(name, pass);
        lemmas.push_back(lemma(name, n, pass, std::move(details)));
    };

    const auto g = gram_check(h);
    add("gram", g.pass, {{"identity_coefficient", factorial_u64(n - 1)}, {"kron_coefficient", factorial_u64(n - 2)}});

    const auto b = blocks(group, h);
    add("block_form", b.block_form && b.m_rows_weight,
        {{"N", {b.N.rows(), b.N.cols()}}, {"M", {b.M.rows(), b.M.cols()}}, {"W", {b.W.rows(), b.W.cols()}},
         {"m_rows_weight", b.m_rows_weight}});

    const auto rank_h = rank(h.entries);
    add("rank_H", rank_h == sq, {{"rank", rank_h}, {"expected", sq}});
    const auto rank_m = rank(b.M);
    const auto expected_m = static_cast<std::size_t>((n - 1) * (n - 2));
    add("rank_M", rank_m == expected_m, {{"rank", rank_m}, {"expected", expected_m}});

    const auto pi = pi_submatrix(n);
    json pi_rows = json::array();
    for (std::size_t r = 0; r < pi.rows.size(); ++r)
        pi_rows.push_back(to_cycle_string(pi.rows[r]));
    add("pi_submatrix", pi.equals_kron, {{"rows", pi_rows}, {"bits", matrix_rows(pi.entries)}});

    if (n >= 4) {
        const auto k = kernel_m_with_ones(b);
        json basis = json::array();
        for (const auto& v : k.basis) basis.push_back(rational_list(v));
        add("kernel_M_ones", k.spanned_by_predicted, {{"basis", basis}});
        const auto spot = kernel_spot_checks(h, b, 20, seed);
        add("kernel_N_in_W", spot.passed == spot.trials,
            {{"kernel_dimension", spot.kernel_dimension}, {"trials", spot.trials}, {"passed", spot.passed}});
    }

    const auto bc = basis_check(scheme, h);
    add("module_support", bc.supports_standard, {{"partition", standard_partition(n).str()}});
    add("basis", bc.rank_shifted == bc.expected_rank && bc.rank_h_with_ones == bc.expected_rank + 1,
        {{"rank_shifted", bc.rank_shifted}, {"expected", bc.expected_rank}, {"rank_H_with_ones", bc.rank_h_with_ones}});

    o.result = {{"lemmas", lemmas}};
    return o;
}

inline Outcome cmd_conjecture(int n, int t, int depth) {
    Outcome o;
    o.parameters = {{"n", n}, {"t", t}, {"depth", depth}};
    const auto d = depth_conjecture_dims(n, t, depth);
    o.result = {{"families", d.families},
                {"module_dim_sum", str(d.module_dim_sum)},
                {"span_rank_shifted", d.span_rank_shifted},
                {"span_rank_with_ones", d.span_rank_with_ones},
                {"agrees_shifted", d.agrees_shifted()},
                {"agrees_with_ones", d.agrees_with_ones()},
                {"observed_support", partition_list(d.observed_support)},
                {"supports_within_depth", d.supports_within_depth}};
    o.check("every shifted v_{S_A} lies in modules of depth at most " + std::to_string(depth), d.supports_within_depth);
    o.lines.push_back("module dimension sum " + str(d.module_dim_sum) + "; span rank shifted " +
                      std::to_string(d.span_rank_shifted) + ", with ones " + std::to_string(d.span_rank_with_ones));
    return o;
}

inline RationalVector random_indicator(std::size_t size, std::mt19937_64& rng) {
    RationalVector v(size);
    for (auto& x : v) x = static_cast<int>(rng() & 1u);
    return v;
}

inline Outcome cmd_identity_check(int n, int pairs, std::uint64_t seed) {
    require_range("identity-check", n, 2, 6);
    if (pairs < 0) throw InputError("identity-check: --pairs must be nonnegative");
    Outcome o;
    o.parameters = {{"n", n}, {"pairs", pairs}, {"seed", seed}};
    const ConjugacyScheme scheme(n);
    std::mt19937_64 rng(seed);
    int agreed = 0;
    for (int k = 0; k < pairs; ++k) {
        const auto x = random_indicator(scheme.order(), rng), y = random_indicator(scheme.order(), rng);
        const auto [lhs, rhs] = scheme.fundamental_identity(x, y);
        agreed += lhs == rhs;
    }
    o.check("identity holds for random 0/1 pairs", agreed == pairs);
    const auto x = scheme.characteristic_vector(latin_clique(n).members);
    const auto y = scheme.characteristic_vector(point_stabiliser_coset(n, 1, 1).members);
    const auto [lhs, rhs] = scheme.fundamental_identity(x, y);
    const Rational expected(BigInt(n) * factorial(static_cast<unsigned>(n - 1)), factorial(static_cast<unsigned>(n)));
    o.check("equality configuration: Latin clique against S_{1,1}", lhs == rhs && lhs == expected);
    o.result = {{"random_pairs_agreeing", agreed}, {"equality_case", {{"lhs", str(lhs)}, {"rhs", str(rhs)}}}};
    o.lines.push_back(std::to_string(agreed) + "/" + std::to_string(pairs) + " random pairs agree; equality case " +
                      str(lhs) + " = " + str(rhs));
    return o;
}

inline std::vector<Permutation> read_family(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open family file '" + path + "'");
    std::vector<Permutation> out;
    std::string line;
    while (std::getline(f, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parse_one_line(line));
        if (out.back().degree() != out.front().degree()) throw InputError("family: permutations of mixed degree");
    }
    if (f.bad()) throw IoError("failed reading '" + path + "'");
    if (out.empty()) throw InputError("family: no permutations in '" + path + "'");
    return out;
}

inline Outcome cmd_validate(const std::string& path, int t) {
    Outcome o;
    o.parameters = {{"family", path}, {"t", t}};
    auto set = read_family(path);
    const int n = set.front().degree();
    require_threshold(n, t);
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw InputError("family: repeated permutation");
    const auto v = validate_family(set, t);
    o.result = {{"n", n}, {"size", set.size()}, {"valid", v.valid}};
    if (v.witness) o.result["witness"] = {to_one_line(v.witness->first), to_one_line(v.witness->second)};
    if (t == 0)
        if (auto m = match_point_stabiliser_coset(set)) o.result["coset"] = {m->first, m->second};
    if (n >= 3 && n <= 6) {
        const ConjugacyScheme scheme(n);
        o.result["module_support"] = partition_list(support_partitions(module_support(scheme, set)));
    }
    o.check("pairwise agreements exceed t", v.valid);
    o.lines.push_back(std::string(v.valid ? "valid" : "invalid") + " family of " + std::to_string(set.size()) +
                      " permutations");
    if (v.witness) o.lines.push_back("  witness: " + to_one_line(v.witness->first) + " / " + to_one_line(v.witness->second));
    return o;
}

/// Desk-scale run of every verification, one scoreboard line per item.
inline Outcome cmd_verify_all(unsigned workers, std::uint64_t seed) {
    Outcome o;
    o.parameters = {{"workers", workers}, {"seed", seed}};
    json board = json::array();
    auto run = [&](const std::string& name, const std::function<Outcome()>& f) {
        const auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string error;
        try {
            pass = f().pass();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json e = {{"item", name}, {"pass", pass}};
        if (!error.empty()) e["error"] = error;
        board.push_back(e);
        o.check(name, pass);
        std::ostringstream line;
        line << (pass ? "PASS " : "FAIL ") << name << " (" << std::fixed << std::setprecision(2) << secs << "s)";
        if (!error.empty()) line << ": " << error;
        o.lines.push_back(line.str());
    };
    for (int n = 1; n <= 9; ++n) run("derangements " + std::to_string(n), [=] { return cmd_derangements(n); });
    for (int n = 1; n <= 8; ++n) run("chartab " + std::to_string(n), [=] { return cmd_chartab(n, false, nullptr); });
    for (int n = 2; n <= 9; ++n) run("spectrum " + std::to_string(n), [=] { return cmd_spectrum(n, 0); });
    for (int n = 3; n <= 8; ++n) run("bounds " + std::to_string(n), [=] { return cmd_bounds(n, 0); });
    run("bounds 5 --t 1", [] { return cmd_bounds(5, 1); });
    for (int n = 3; n <= 8; ++n) run("clique " + std::to_string(n) + " latin", [=] { return cmd_clique(n, "latin"); });
    for (int n : {7, 8, 9}) run("clique " + std::to_string(n) + " cycles", [=] { return cmd_clique(n, "cycles"); });
    for (int n : {7, 9}) run("clique " + std::to_string(n) + " odd-latin", [=] { return cmd_clique(n, "odd-latin"); });
    run("clique 5 affine", [] { return cmd_clique(5, "affine"); });
    for (int n = 3; n <= 5; ++n) run("classify " + std::to_string(n), [=] { return cmd_classify(n, workers); });
    for (int n : {4, 5}) run("identity-check " + std::to_string(n), [=] { return cmd_identity_check(n, 20, seed); });
    for (int n = 3; n <= 6; ++n) run("lemmas " + std::to_string(n), [=] { return cmd_lemmas(n, seed, ""); });
    for (int n = 4; n <= 6; ++n) run("conjecture " + std::to_string(n) + " --t 1 --depth 2", [=] { return cmd_conjecture(n, 1, 2); });
    o.result = {{"scoreboard", board}};
    return o;
}

// -- driver -----------------------------------------------------------------

inline void emit(const std::string& command, const Outcome& o, double seconds, bool text, std::ostream& os) {
    if (text) {
        os << command << ": " << (o.pass() ? "PASS" : "FAIL") << "\n";
        for (const auto& l : o.lines) os << l << "\n";
        for (const auto& c : o.checks) os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name << "\n";
        return;
    }
    json checks = json::array();
    for (const auto& c : o.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    json report = {{"schema", kSchema}, {"command", command}, {"parameters", o.parameters}, {"pass", o.pass()},
                   {"checks", checks},  {"result", o.result},  {"wall_time_s", seconds}};
    os << report.dump(2) << "\n";
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact verification of the algebraic EKR argument for permutations", "ekr"};
    app.require_subcommand(1);
    std::string out_path;
    bool text = false;
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_flag("--text", text, "human-readable output");

    int n = 0, t = 0, depth = -1, pairs = 20;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    bool csv = false;
    std::string method, family_path, matrix_out;

    auto with_n = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("n", n, "degree")->required();
        s->fallthrough();
        return s;
    };
    auto* derangements = with_n("derangements", "d(n) by recursion");
    auto* chartab = with_n("chartab", "character table of S(n)");
    chartab->add_flag("--csv", csv, "CSV instead of JSON");
    auto* spectrum = with_n("spectrum", "eigenvalues of P_t(n)");
    spectrum->add_option("--t", t, "agreement threshold");
    auto* bounds = with_n("bounds", "clique-coclique and ratio bounds");
    bounds->add_option("--t", t, "agreement threshold");
    auto* clique = with_n("clique", "explicit maximum cliques");
    clique->add_option("--method", method, "latin | odd-latin | cycles | affine")
        ->required()
        ->check(CLI::IsMember({"latin", "odd-latin", "cycles", "affine"}));
    auto* search = with_n("search", "exhaustive maximum independent sets");
    search->add_option("--t", t, "agreement threshold");
    search->add_option("--workers", workers, "threads for the search");
    auto* classify = with_n("classify", "classify maximum intersecting families");
    classify->add_option("--workers", workers, "threads for the search");
    auto* lemmas = with_n("lemmas", "incidence-matrix lemmas");
    lemmas->add_option("--seed", seed, "seed for kernel spot checks");
    lemmas->add_option("--matrix-out", matrix_out, "write H in the plain-text matrix format");
    auto* conjecture = with_n("conjecture", "depth-bounded module dimensions for P_t(n)");
    conjecture->add_option("--t", t, "agreement threshold (1 or 2)")->required();
    conjecture->add_option("--depth", depth, "depth bound (default t+1)");
    auto* identity = with_n("identity-check", "fundamental identity on random vectors");
    identity->add_option("--pairs", pairs, "number of random pairs");
    identity->add_option("--seed", seed, "random seed");
    auto* verify_all = app.add_subcommand("verify-all", "run every desk-scale verification");
    verify_all->add_option("--workers", workers, "threads for the search");
    verify_all->add_option("--seed", seed, "random seed");
    verify_all->fallthrough();
    auto* validate = app.add_subcommand("validate", "check a user-supplied family");
    validate->add_option("--family", family_path, "newline-separated one-line permutations")->required();
    validate->add_option("--t", t, "agreement threshold");
    validate->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string command = app.get_subcommands().front()->get_name();
    try {
        Outcome o;
        std::string csv_text;
        if (*derangements) o = cmd_derangements(n);
        else if (*chartab) o = cmd_chartab(n, csv, &csv_text);
        else if (*spectrum) o = cmd_spectrum(n, t);
        else if (*bounds) o = cmd_bounds(n, t);
        else if (*clique) o = cmd_clique(n, method);
        else if (*search) o = cmd_search(n, t, workers);
        else if (*classify) o = cmd_classify(n, workers);
        else if (*lemmas) o = cmd_lemmas(n, seed, matrix_out);
        else if (*conjecture) o = cmd_conjecture(n, t, depth < 0 ? t + 1 : depth);
        else if (*identity) o = cmd_identity_check(n, pairs, seed);
        else if (*verify_all) o = cmd_verify_all(workers, seed);
        else if (*validate) o = cmd_validate(family_path, t);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::ostringstream body;
        if (csv) body << csv_text;
        else emit(command, o, secs, text, body);
        if (out_path.empty()) {
            out << body.str();
        } else {
            std::ofstream f(out_path);
            if (!f || !(f << body.str())) throw IoError("cannot write '" + out_path + "'");
        }
        return o.pass() ? ok : check_failed;
    } catch (const DegreeError& e) {
        err << "error: " << e.what() << "\n";
        return out_of_range;
    } catch (const UnsupportedConstruction& e) {
        err << "error: " << e.what() << "\n";
        return unsupported;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return io_error;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return check_failed;
    }
}

}  // namespace ekr::cli
