#include "descent/symfun.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "descent/matching.hpp"
#include "descent/oscillating.hpp"

namespace descent {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerifyResult start_result(std::string identity, int n, int k = -1, int j = -1) {
    VerifyResult r;
    r.identity = std::move(identity);
    r.n = n;
    r.k = k;
    r.j = j;
    return r;
}

void fail(VerifyResult& r, std::string witness) {
    r.ok = false;
    if (r.witness_diff.size() < kWitnessCap) r.witness_diff.push_back(std::move(witness));
}

void merge_diff(VerifyResult& r, const std::vector<std::string>& lines) {
    if (lines.empty()) return;
    r.ok = false;
    for (const auto& line : lines) {
        if (r.witness_diff.size() < kWitnessCap) r.witness_diff.push_back(line);
    }
}

void require_even(int n2, const char* who) {
    if (n2 < 0 || n2 % 2 != 0) throw std::invalid_argument(std::string(who) + ": size must be even and >= 0");
}

std::string pair_string(const DescentSet& x, const DescentSet& y) { return "(" + x.to_string() + "," + y.to_string() + ")"; }

void collect_chains(int n, int num_vars, const DescentSet& d, std::vector<int>& chain,
                    std::map<std::vector<int>, long>& out) {
    const int pos = static_cast<int>(chain.size());
    if (pos == n) {
        std::vector<int> exps(num_vars, 0);
        for (int i : chain) ++exps[i - 1];
        ++out[exps];
        return;
    }
    int lo = 1;
    if (pos > 0) lo = chain.back() + (d.contains(pos) ? 1 : 0);
    for (int v = lo; v <= num_vars; ++v) {
        chain.push_back(v);
        collect_chains(n, num_vars, d, chain, out);
        chain.pop_back();
    }
}

std::set<int> part_set(const Permutation& p) {
    const auto parts = cycle_type(p).parts;
    return {parts.begin(), parts.end()};
}

bool share_part(const Permutation& a, const Permutation& b) {
    const auto pa = part_set(a), pb = part_set(b);
    return std::any_of(pa.begin(), pa.end(), [&](int x) { return pb.count(x) > 0; });
}

std::map<DescentSet, long> des_multiset(const std::vector<Permutation>& perms) {
    std::map<DescentSet, long> out;
    for (const auto& p : perms) ++out[des(p)];
    return out;
}

std::string fmt_set(const DescentSet& d) { return d.to_string(); }

}  // namespace

std::string to_string(const QSymTerm& term) {
    return "q^" + std::to_string(term.a) + " t^" + std::to_string(term.b) + " F" + term.d.to_string();
}

void FormalQSym::add(int a, int b, const DescentSet& d, long count) {
    if (a < 0 || b < 0) throw std::invalid_argument("FormalQSym: negative exponent");
    if (d.is_cyclic() || d.n() != n_) throw std::invalid_argument("FormalQSym: descent set must be a subset of [n-1]");
    terms_[QSymTerm{a, b, d}] += count;
}

long FormalQSym::total() const {
    long sum = 0;
    for (const auto& [term, count] : terms_) sum += count;
    return sum;
}

std::vector<std::string> diff(const FormalQSym& lhs, const FormalQSym& rhs) {
    return multiset_diff(lhs.terms(), rhs.terms(), [](const QSymTerm& t) { return to_string(t); });
}

std::map<std::vector<int>, long> fundamental_eval(int n, const DescentSet& d, int num_vars) {
    if (num_vars < 1) throw std::invalid_argument("fundamental_eval: need at least one variable");
    if (n < 0 || d.is_cyclic() || d.n() != n) throw std::invalid_argument("fundamental_eval: D must be a subset of [n-1]");
    std::map<std::vector<int>, long> out;
    std::vector<int> chain;
    collect_chains(n, num_vars, d, chain, out);
    return out;
}

std::map<std::tuple<int, int, std::vector<int>>, long> evaluate(const FormalQSym& f, int num_vars) {
    std::map<std::tuple<int, int, std::vector<int>>, long> out;
    for (const auto& [term, count] : f.terms()) {
        for (const auto& [exps, mult] : fundamental_eval(f.n(), term.d, num_vars)) {
            out[{term.a, term.b, exps}] += count * mult;
        }
    }
    return out;
}

std::map<DescentSet, long> schur_descent_multiset(const Shape& shape) {
    std::map<DescentSet, long> out;
    for (const auto& t : enumerate_syt(shape)) ++out[des(t)];
    return out;
}

FormalQSym lhs_main0(int n) {
    FormalQSym f(n);
    for (const auto& m : enumerate_matchings(n)) f.add(m.unmatched(), crossing_number(m), mdes(m));
    return f;
}

FormalQSym rhs_main0(int n) {
    FormalQSym f(n);
    for (const auto& shape : partitions(n)) {
        const int oc = shape.odd_cols();
        const int half_height = shape.height() / 2;
        for (const auto& [d, count] : schur_descent_multiset(shape)) f.add(oc, half_height, d, count);
    }
    return f;
}

VerifyResult verify_main0(int n) {
    const auto start = Clock::now();
    auto r = start_result("main0", n);
    const FormalQSym lhs = lhs_main0(n);
    const FormalQSym rhs = rhs_main0(n);
    merge_diff(r, diff(lhs, rhs));
    r.counts = {{"matchings", lhs.total()}, {"tableaux", rhs.total()}};
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyResult verify_lemma_main1(int n2) {
    require_even(n2, "verify_lemma_main1");
    const auto start = Clock::now();
    auto r = start_result("main1", n2, 0);
    std::map<std::pair<DescentSet, DescentSet>, long> pairs, swapped;
    using Refined = std::tuple<DescentSet, DescentSet, int, int>;
    std::map<Refined, long> refined, refined_swapped;
    long count = 0;
    for (const auto& m : enumerate_matchings(n2, 0)) {
        const DescentSet d = des(m), md = mdes(m);
        const int cr = crossing_number(m), ne = nesting_number(m);
        ++pairs[{d, md}];
        ++swapped[{md, d}];
        // x^{MDes} y^{Des} q^{cr} t^{ne} against x^{Des} y^{MDes} q^{ne} t^{cr}.
        ++refined[{md, d, cr, ne}];
        ++refined_swapped[{d, md, ne, cr}];
        ++count;
    }
    merge_diff(r, multiset_diff(pairs, swapped, [](const auto& k) { return pair_string(k.first, k.second); }));
    merge_diff(r, multiset_diff(refined, refined_swapped, [](const Refined& k) {
                   return pair_string(std::get<0>(k), std::get<1>(k)) + " cr=" + std::to_string(std::get<2>(k)) +
                          " ne=" + std::to_string(std::get<3>(k));
               }));
    r.counts = {{"matchings", count}};
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyResult verify_main11(int n, int k) {
    check_nk(n, k);
    const auto start = Clock::now();
    auto r = start_result("main11", n, k);
    std::map<std::pair<int, DescentSet>, long> lhs, rhs;
    long count = 0;
    for (const auto& m : enumerate_matchings(n, k)) {
        ++lhs[{crossing_number(m), mdes(m)}];
        ++rhs[{nesting_number(m), des(m)}];
        ++count;
    }
    merge_diff(r, multiset_diff(lhs, rhs, [](const auto& key) {
                   return "(" + std::to_string(key.first) + "," + key.second.to_string() + ")";
               }));
    r.counts = {{"matchings", count}};
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyResult verify_main111(int n, int k) {
    check_nk(n, k);
    const auto start = Clock::now();
    auto r = start_result("main111", n, k);
    using Key = std::tuple<int, int, DescentSet>;
    std::map<Key, long> lhs, rhs;
    long count = 0;
    for (const auto& m : enumerate_matchings(n, k)) {
        const int cr = crossing_number(m), ne = nesting_number(m);
        ++lhs[{cr, ne, mdes(m)}];
        ++rhs[{ne, cr, des(m)}];
        ++count;
    }
    merge_diff(r, multiset_diff(lhs, rhs, [](const Key& key) {
                   return "(" + std::to_string(std::get<0>(key)) + "," + std::to_string(std::get<1>(key)) + "," +
                          std::get<2>(key).to_string() + ")";
               }));
    r.counts = {{"matchings", count}};
    r.elapsed_ms = ms_since(start);
    return r;
}

std::vector<Permutation> gessel_class(const Permutation& pi, const Permutation& sigma) {
    if (share_part(pi, sigma)) throw std::invalid_argument("gessel_class: cycle types share a part");
    const int m = pi.size();
    const int total = m + sigma.size();
    std::vector<Permutation> out;
    // choose[i] marks the positions of U among 1..total.
    std::vector<char> choose(total, 0);
    std::fill(choose.begin(), choose.begin() + m, 1);
    do {
        std::vector<int> u, v;
        for (int i = 0; i < total; ++i) (choose[i] ? u : v).push_back(i + 1);
        std::vector<int> images(total);
        for (int a = 1; a <= m; ++a) images[u[a - 1] - 1] = u[pi(a) - 1];
        for (int b = 1; b <= sigma.size(); ++b) images[v[b - 1] - 1] = v[sigma(b) - 1];
        out.emplace_back(std::move(images));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return out;
}

VerifyResult verify_gessel(const Permutation& pi, const Permutation& sigma) {
    const auto start = Clock::now();
    auto r = start_result("gessel", pi.size() + sigma.size());
    const auto cls = gessel_class(pi, sigma);
    std::vector<int> shifted;
    for (int x : sigma.one_line()) shifted.push_back(x + pi.size());
    const auto sh = shuffles(pi.one_line(), shifted);
    merge_diff(r, multiset_diff(des_multiset(cls), des_multiset(sh), fmt_set));
    r.counts = {{"pairs", 1}, {"class_size", static_cast<long>(cls.size())}};
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyResult verify_gessel_all(int max_total) {
    if (max_total < 0) throw std::invalid_argument("verify_gessel_all: negative bound");
    const auto start = Clock::now();
    auto r = start_result("gessel", max_total);
    long pairs = 0, elements = 0;
    for (int m = 1; m < max_total; ++m) {
        const auto left = enumerate_permutations(m);
        for (int n = 1; m + n <= max_total; ++n) {
            const auto right = enumerate_permutations(n);
            for (const auto& pi : left) {
                for (const auto& sigma : right) {
                    if (share_part(pi, sigma)) continue;
                    const auto one = verify_gessel(pi, sigma);
                    ++pairs;
                    elements += one.counts.at("class_size");
                    if (!one.ok) fail(r, format_cycles(pi) + " with " + format_cycles(sigma));
                }
            }
        }
    }
    r.counts = {{"pairs", pairs}, {"class_elements", elements}};
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyResult verify_chen(int n2) {
    require_even(n2, "verify_chen");
    const auto start = Clock::now();
    auto r = start_result("chen", n2, 0);
    long count = 0;
    for (const auto& m : enumerate_matchings(n2, 0)) {
        const Matching image = chen_iota(m);
        if (des(image) != mdes(m)) fail(r, "Des(iota(m)) != MDes(m) at " + format_matching(m));
        if (crossing_number(image) != nesting_number(m) || nesting_number(image) != crossing_number(m)) {
            fail(r, "cr/ne not swapped at " + format_matching(m));
        }
        if (chen_iota(image) != m) fail(r, "iota is not an involution at " + format_matching(m));
        ++count;
    }
    r.counts = {{"matchings", count}};
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyResult verify_sundaram_roundtrip(int n2) {
    require_even(n2, "verify_sundaram_roundtrip");
    const auto start = Clock::now();
    auto r = start_result("sundaram-roundtrip", n2, 0);
    std::set<OscillatingTableau> images;
    long matchings = 0;
    for (const auto& m : enumerate_matchings(n2, 0)) {
        const Permutation p = to_involution(m);
        const OscillatingTableau o = sundaram(p);
        if (sundaram_inverse(o) != p) fail(r, "s^{-1}(s(m)) != m at " + format_matching(m));
        images.insert(o);
        ++matchings;
    }
    const auto walks = enumerate_oscillating(n2);
    for (const auto& o : walks) {
        if (sundaram(sundaram_inverse(o)) != o) fail(r, "s(s^{-1}(o)) != o at " + format_oscillating(o));
    }
    if (static_cast<long>(images.size()) != matchings) fail(r, "sundaram is not injective");
    if (static_cast<long>(walks.size()) != matchings) fail(r, "oscillating tableau count differs from matching count");
    r.counts = {{"matchings", matchings}, {"oscillating", static_cast<long>(walks.size())}};
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyResult verify_kim(int n2) {
    require_even(n2, "verify_kim");
    const auto start = Clock::now();
    auto r = start_result("kim", n2, 0);
    long count = 0;
    for (const auto& m : enumerate_matchings(n2, 0)) {
        if (kim_des(sundaram(to_involution(m))) != des(m)) fail(r, "kim_des(s(m)) != Des(m) at " + format_matching(m));
        ++count;
    }
    r.counts = {{"matchings", count}};
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyResult verify_roby(int n2) {
    require_even(n2, "verify_roby");
    const auto start = Clock::now();
    auto r = start_result("roby", n2, 0);
    long count = 0;
    for (const auto& m : enumerate_matchings(n2, 0)) {
        const Permutation p = to_involution(m);
        if (sundaram(conjugate_w0(p)) != sundaram(p).reversed()) {
            fail(r, "s(w0 m w0) != reverse(s(m)) at " + format_matching(m));
        }
        ++count;
    }
    r.counts = {{"matchings", count}};
    r.elapsed_ms = ms_since(start);
    return r;
}

}  // namespace descent
