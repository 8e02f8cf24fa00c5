#include "hb/groups.hpp"

#include "hb/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hb {

namespace {

const Rational kHalf(1, 2);

bool is_even(long long v) { return v % 2 == 0; }

void require_even_ambient(long long n, long long m) {
    if (n < 2 || m < 2 || !is_even(n) || !is_even(m))
        throw std::domain_error("ambient C_n x C_m requires even n, m >= 2");
}

GroupElement minus_one_both() {
    return {RationalAngle(kHalf), RationalAngle(kHalf)};
}
GroupElement minus_one_first() { return {RationalAngle(kHalf), RationalAngle()}; }
GroupElement minus_one_second() { return {RationalAngle(), RationalAngle(kHalf)}; }

[[noreturn]] void parameter_error(const std::string& what, const std::string& range) {
    throw std::invalid_argument("subgroup parameter out of range: " + what +
                                " (expected " + range + ")");
}

} // namespace

const char* to_string(SubgroupClass c) {
    switch (c) {
    case SubgroupClass::O: return "O";
    case SubgroupClass::E1: return "E1";
    case SubgroupClass::E2: return "E2";
    case SubgroupClass::E3: return "E3";
    case SubgroupClass::E4: return "E4";
    }
    return "?";
}

std::optional<SubgroupClass> subgroup_class_from_string(const std::string& s) {
    if (s == "O") return SubgroupClass::O;
    if (s == "E1") return SubgroupClass::E1;
    if (s == "E2") return SubgroupClass::E2;
    if (s == "E3") return SubgroupClass::E3;
    if (s == "E4") return SubgroupClass::E4;
    return std::nullopt;
}

std::string to_string(const GroupElement& g) {
    return "(" + to_string(g.theta.turns()) + ", " + to_string(g.phi.turns()) + ")";
}

bool FiniteSubgroup::contains(const GroupElement& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

bool FiniteSubgroup::subset_of(const FiniteSubgroup& other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(),
                         elements.end());
}

bool element_set_less(const FiniteSubgroup& a, const FiniteSubgroup& b) {
    return std::lexicographical_compare(a.elements.begin(), a.elements.end(),
                                        b.elements.begin(), b.elements.end());
}

bool same_element_set(const FiniteSubgroup& a, const FiniteSubgroup& b) {
    return a.elements == b.elements;
}

SubgroupClass classify(long long ambient_n, long long ambient_m,
                       const std::vector<GroupElement>& elements) {
    require_even_ambient(ambient_n, ambient_m);
    if (elements.size() % 2 == 1) return SubgroupClass::O;
    auto has = [&](const GroupElement& g) {
        return std::binary_search(elements.begin(), elements.end(), g);
    };
    bool a = has(minus_one_both());
    bool b = has(minus_one_first());
    bool c = has(minus_one_second());
    if ((a && b) || (a && c) || (b && c)) return SubgroupClass::E4; // any two imply D
    if (a) return SubgroupClass::E1;
    if (b) return SubgroupClass::E2;
    if (c) return SubgroupClass::E3;
    throw std::logic_error("even-order element set without any order-2 kernel element; "
                           "the set cannot be a subgroup of C_n x C_m");
}

std::vector<GroupElement> kernel(long long n, long long m) {
    require_even_ambient(n, m);
    return {GroupElement::identity(), minus_one_first(), minus_one_second(),
            minus_one_both()};
}

FiniteSubgroup subgroup_from_generators(long long n, long long m,
                                        std::vector<GroupElement> gens) {
    std::set<GroupElement> closed{GroupElement::identity()};
    for (const auto& g : gens) {
        // abelian: multiply the current closure by all powers of g
        std::set<GroupElement> next;
        long long og = static_cast<long long>(g.order());
        for (const auto& e : closed) {
            GroupElement cur = e;
            for (long long i = 0; i < og; ++i) {
                next.insert(cur);
                cur = cur * g;
            }
        }
        closed.swap(next);
    }
    FiniteSubgroup f;
    f.ambient_n = n;
    f.ambient_m = m;
    f.generators = std::move(gens);
    if (f.generators.empty()) f.generators.push_back(GroupElement::identity());
    f.elements.assign(closed.begin(), closed.end());
    f.order = static_cast<long long>(f.elements.size());
    f.class_tag = classify(n, m, f.elements);
    return f;
}

FiniteSubgroup make_ambient(long long n, long long m) {
    require_even_ambient(n, m);
    std::vector<GroupElement> els;
    els.reserve(static_cast<std::size_t>(n * m));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < m; ++j) els.push_back(GroupElement::from_indices(i, j, n, m));
    std::sort(els.begin(), els.end());
    FiniteSubgroup f;
    f.ambient_n = n;
    f.ambient_m = m;
    f.generators = {GroupElement::from_indices(1, 0, n, m),
                    GroupElement::from_indices(0, 1, n, m)};
    f.elements = std::move(els);
    f.order = n * m;
    f.class_tag = classify(n, m, f.elements);
    return f;
}

namespace {

// Local generator of a prime part inside Z_{p^a} x Z_{p^b}, mapped to global
// exponents: the first slot contributes multiples of n/p^a, the second of
// m/p^b.
struct GlobalTerm {
    long long first = 0;
    long long second = 0;
};

GlobalTerm first_generator_term(long long n, long long m, long long p, int a, int b, int k,
                                Anchor anchor, bool tall, long long r) {
    const long long cof_n = n / ipow(p, a);
    const long long cof_m = m / ipow(p, b);
    GlobalTerm t;
    if (anchor == Anchor::Second) {
        t.first = (tall ? r : r * ipow(p, a - k)) * cof_n;
        t.second = ipow(p, b - k) * cof_m;
    } else {
        t.first = ipow(p, a - k) * cof_n;
        t.second = (tall ? r : r * ipow(p, b - k + 1)) * cof_m;
    }
    return t;
}

void validate_common(const SubgroupParameters& p) {
    require_even_ambient(p.n, p.m);
    const Factorization fn = factorize(p.n);
    const Factorization fm = factorize(p.m);
    std::set<long long> primes;
    auto check_prime = [&](long long prime, int exp_n, int exp_m) {
        if (!primes.insert(prime).second)
            throw std::invalid_argument("subgroup parameters repeat a prime");
        if (exp_n != fn.exponent_of(prime) || exp_m != fm.exponent_of(prime))
            parameter_error("prime exponents", "the exponents of " + std::to_string(prime) +
                                                   " in n and m");
    };
    for (const auto& c : p.cyclic_parts) check_prime(c.prime, c.exp_n, c.exp_m);
    for (const auto& t : p.two_gen_parts) check_prime(t.prime, t.exp_n, t.exp_m);
}

void validate_cyclic_part(const CyclicPrimePart& c) {
    const int a = c.exp_n, b = c.exp_m, k = c.k;
    const long long p = c.prime;
    if (!c.tall) {
        if (k < 1 || k > std::min(a, b))
            parameter_error("k for prime " + std::to_string(p), "1 <= k <= min(a,b)");
        const long long hi = c.anchor == Anchor::Second ? ipow(p, k) : ipow(p, k - 1);
        if (c.residue < 0 || c.residue >= hi)
            parameter_error("residue for prime " + std::to_string(p),
                            "0 <= r < " + std::to_string(hi));
    } else if (c.anchor == Anchor::Second) {
        if (!(a < k && k <= b))
            parameter_error("k for prime " + std::to_string(p), "a < k <= b");
        if (c.residue < 0 || c.residue >= ipow(p, a))
            parameter_error("residue for prime " + std::to_string(p),
                            "0 <= r < p^a");
    } else {
        if (!(b < k && k <= a))
            parameter_error("k for prime " + std::to_string(p), "b < k <= a");
        if (c.residue < 0 || c.residue >= ipow(p, b))
            parameter_error("residue for prime " + std::to_string(p),
                            "0 <= r < p^b");
    }
}

void validate_two_gen_part(const TwoGenPrimePart& t) {
    const int a = t.exp_n, b = t.exp_m, k = t.k, l = t.l;
    const long long p = t.prime;
    long long hi = 0;
    if (!t.tall && t.anchor == Anchor::Second) {
        if (!(1 <= l && l <= k && k <= std::min(a, b)))
            parameter_error("(k,l) for prime " + std::to_string(p), "1 <= l <= k <= min(a,b)");
        hi = ipow(p, k - l);
    } else if (!t.tall && t.anchor == Anchor::First) {
        if (!(1 <= l && l < k && k <= std::min(a, b)))
            parameter_error("(k,l) for prime " + std::to_string(p), "1 <= l < k <= min(a,b)");
        hi = ipow(p, k - l - 1);
    } else if (t.anchor == Anchor::Second) {
        if (!(1 <= l && l <= a && a < k && k <= b))
            parameter_error("(k,l) for prime " + std::to_string(p), "1 <= l <= a < k <= b");
        hi = ipow(p, a - l);
    } else {
        if (!(1 <= l && l <= b && b < k && k <= a))
            parameter_error("(k,l) for prime " + std::to_string(p), "1 <= l <= b < k <= a");
        hi = ipow(p, b - l);
    }
    if (t.residue < 0 || t.residue >= hi)
        parameter_error("residue for prime " + std::to_string(t.prime),
                        "0 <= r < " + std::to_string(hi));
}

// Class-E1 condition on the prime-2 part: it must be the cyclic shape with
// the second slot exact and an odd residue. Then the subgroup contains
// (1/2,1/2) and misses (1/2,0) and (0,1/2).
void validate_e1(const SubgroupParameters& p, bool two_generator) {
    const CyclicPrimePart* part2 = nullptr;
    for (const auto& c : p.cyclic_parts)
        if (c.prime == 2) part2 = &c;
    for (const auto& t : p.two_gen_parts)
        if (t.prime == 2)
            throw class_error("class E1 requires a cyclic prime-2 part");
    if (part2 == nullptr || part2->tall || part2->anchor != Anchor::Second ||
        part2->residue % 2 == 0)
        throw class_error("class E1 requires the prime-2 part to be cyclic with the "
                          "second slot exact and an odd residue");
    if (two_generator && p.two_gen_parts.empty())
        throw class_error("a two-generator class E1 subgroup needs a rank-2 odd-prime part");
}

long long expected_order(const SubgroupParameters& p) {
    long long o = 1;
    for (const auto& c : p.cyclic_parts) o *= ipow(c.prime, c.k);
    for (const auto& t : p.two_gen_parts) o *= ipow(t.prime, t.k + t.l);
    return o;
}

FiniteSubgroup build_from_parameters(const SubgroupParameters& p) {
    long long a1 = 0, b1 = 0; // exponents of the first generator
    long long a2 = 0, b2 = 0; // exponents of the second generator
    for (const auto& c : p.cyclic_parts) {
        const GlobalTerm t = first_generator_term(p.n, p.m, c.prime, c.exp_n, c.exp_m, c.k,
                                                  c.anchor, c.tall, c.residue);
        a1 += t.first;
        b1 += t.second;
    }
    for (const auto& tg : p.two_gen_parts) {
        const GlobalTerm t = first_generator_term(p.n, p.m, tg.prime, tg.exp_n, tg.exp_m, tg.k,
                                                  tg.anchor, tg.tall, tg.residue);
        a1 += t.first;
        b1 += t.second;
        // second generator: exact order p^l in the slot opposite the anchor
        if (tg.anchor == Anchor::Second)
            a2 += ipow(tg.prime, tg.exp_n - tg.l) * (p.n / ipow(tg.prime, tg.exp_n));
        else
            b2 += ipow(tg.prime, tg.exp_m - tg.l) * (p.m / ipow(tg.prime, tg.exp_m));
    }
    std::vector<GroupElement> gens;
    gens.push_back(GroupElement::from_indices(a1 % p.n, b1 % p.m, p.n, p.m));
    if (!p.two_gen_parts.empty())
        gens.push_back(GroupElement::from_indices(a2 % p.n, b2 % p.m, p.n, p.m));
    FiniteSubgroup f = subgroup_from_generators(p.n, p.m, std::move(gens));
    if (f.order != expected_order(p))
        throw std::logic_error("parameter tuple closure does not match the product-formula "
                               "order; tuple rejected");
    return f;
}

} // namespace

FiniteSubgroup cyclic_from_parameters(const SubgroupParameters& p, bool e1_restricted) {
    validate_common(p);
    if (!p.two_gen_parts.empty())
        throw std::invalid_argument("cyclic_from_parameters given rank-2 prime parts");
    for (const auto& c : p.cyclic_parts) validate_cyclic_part(c);
    if (e1_restricted) validate_e1(p, false);
    return build_from_parameters(p);
}

FiniteSubgroup two_generator_from_parameters(const SubgroupParameters& p, bool e1_restricted) {
    validate_common(p);
    if (p.two_gen_parts.empty())
        throw std::invalid_argument("two_generator_from_parameters needs a rank-2 prime part");
    for (const auto& c : p.cyclic_parts) validate_cyclic_part(c);
    for (const auto& t : p.two_gen_parts) validate_two_gen_part(t);
    if (e1_restricted) validate_e1(p, true);
    return build_from_parameters(p);
}

namespace {

struct LocalOption {
    bool present = false; // false: this prime contributes the identity
    bool two_gen = false;
    CyclicPrimePart cyc;
    TwoGenPrimePart two;
};

std::vector<LocalOption> cyclic_options(long long p, int a, int b, bool e1_prime2) {
    std::vector<LocalOption> opts;
    auto push = [&](int k, Anchor anchor, bool tall, long long r) {
        LocalOption o;
        o.present = true;
        o.cyc = CyclicPrimePart{p, a, b, k, anchor, tall, r};
        opts.push_back(o);
    };
    if (e1_prime2) {
        // odd residues of the second-slot-exact shape only
        for (int k = 1; k <= std::min(a, b); ++k)
            for (long long r = 1; r < ipow(p, k); r += 2) push(k, Anchor::Second, false, r);
        return opts;
    }
    opts.push_back(LocalOption{}); // identity contribution
    for (int k = 1; k <= std::min(a, b); ++k) {
        for (long long r = 0; r < ipow(p, k); ++r) push(k, Anchor::Second, false, r);
        for (long long r = 0; r < ipow(p, k - 1); ++r) push(k, Anchor::First, false, r);
    }
    for (int k = a + 1; k <= b; ++k)
        for (long long r = 0; r < ipow(p, a); ++r) push(k, Anchor::Second, true, r);
    for (int k = b + 1; k <= a; ++k)
        for (long long r = 0; r < ipow(p, b); ++r) push(k, Anchor::First, true, r);
    return opts;
}

std::vector<LocalOption> two_gen_options(long long p, int a, int b) {
    std::vector<LocalOption> opts;
    auto push = [&](int k, int l, Anchor anchor, bool tall, long long r) {
        LocalOption o;
        o.present = true;
        o.two_gen = true;
        o.two = TwoGenPrimePart{p, a, b, k, l, anchor, tall, r};
        opts.push_back(o);
    };
    for (int k = 1; k <= std::min(a, b); ++k) {
        for (int l = 1; l <= k; ++l)
            for (long long r = 0; r < ipow(p, k - l); ++r) push(k, l, Anchor::Second, false, r);
        for (int l = 1; l < k; ++l)
            for (long long r = 0; r < ipow(p, k - l - 1); ++r) push(k, l, Anchor::First, false, r);
    }
    for (int k = a + 1; k <= b; ++k)
        for (int l = 1; l <= a; ++l)
            for (long long r = 0; r < ipow(p, a - l); ++r) push(k, l, Anchor::Second, true, r);
    for (int k = b + 1; k <= a; ++k)
        for (int l = 1; l <= b; ++l)
            for (long long r = 0; r < ipow(p, b - l); ++r) push(k, l, Anchor::First, true, r);
    return opts;
}

std::vector<FiniteSubgroup> enumerate_from_options(
    long long n, long long m, const std::vector<std::vector<LocalOption>>& per_prime,
    bool want_two_gen, bool e1_structural) {
    std::vector<FiniteSubgroup> out;
    std::vector<const LocalOption*> choice(per_prime.size());
    auto emit = [&]() {
        bool any_two = false;
        SubgroupParameters params;
        params.n = n;
        params.m = m;
        for (const LocalOption* o : choice) {
            if (!o->present) continue;
            if (o->two_gen) {
                any_two = true;
                params.two_gen_parts.push_back(o->two);
            } else {
                params.cyclic_parts.push_back(o->cyc);
            }
        }
        if (any_two != want_two_gen) return;
        out.push_back(want_two_gen ? two_generator_from_parameters(params, e1_structural)
                                   : cyclic_from_parameters(params, e1_structural));
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == per_prime.size()) {
            emit();
            return;
        }
        for (const LocalOption& o : per_prime[idx]) {
            choice[idx] = &o;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), element_set_less);
    for (std::size_t i = 1; i < out.size(); ++i)
        if (same_element_set(out[i - 1], out[i]))
            throw std::logic_error("subgroup parameterization produced a duplicate element set");
    return out;
}

std::vector<long long> ambient_primes(long long n, long long m) {
    std::set<long long> ps;
    for (const auto& [p, e] : factorize(n).factors) ps.insert(p);
    for (const auto& [p, e] : factorize(m).factors) ps.insert(p);
    return {ps.begin(), ps.end()};
}

} // namespace

std::vector<FiniteSubgroup> enumerate_cyclic(long long n, long long m,
                                             std::optional<SubgroupClass> class_filter) {
    require_even_ambient(n, m);
    const Factorization fn = factorize(n), fm = factorize(m);
    const bool e1 = class_filter == SubgroupClass::E1;
    std::vector<std::vector<LocalOption>> per_prime;
    for (long long p : ambient_primes(n, m))
        per_prime.push_back(cyclic_options(p, fn.exponent_of(p), fm.exponent_of(p), e1 && p == 2));
    std::vector<FiniteSubgroup> out = enumerate_from_options(n, m, per_prime, false, e1);
    if (class_filter && !e1) {
        std::erase_if(out, [&](const FiniteSubgroup& f) { return f.class_tag != *class_filter; });
    }
    return out;
}

std::vector<FiniteSubgroup> enumerate_two_generator(long long n, long long m,
                                                    std::optional<SubgroupClass> class_filter) {
    require_even_ambient(n, m);
    const Factorization fn = factorize(n), fm = factorize(m);
    const bool e1 = class_filter == SubgroupClass::E1;
    std::vector<std::vector<LocalOption>> per_prime;
    for (long long p : ambient_primes(n, m)) {
        const int a = fn.exponent_of(p), b = fm.exponent_of(p);
        std::vector<LocalOption> opts = cyclic_options(p, a, b, e1 && p == 2);
        if (!(e1 && p == 2)) {
            // rank-2 local parts; in class E1 the prime-2 part must stay cyclic
            std::vector<LocalOption> two = two_gen_options(p, a, b);
            opts.insert(opts.end(), two.begin(), two.end());
        }
        per_prime.push_back(std::move(opts));
    }
    std::vector<FiniteSubgroup> out = enumerate_from_options(n, m, per_prime, true, e1);
    if (class_filter && !e1) {
        std::erase_if(out, [&](const FiniteSubgroup& f) { return f.class_tag != *class_filter; });
    }
    return out;
}

std::vector<FiniteSubgroup> enumerate_subgroups(long long n, long long m,
                                                std::optional<SubgroupClass> class_filter) {
    std::vector<FiniteSubgroup> all = enumerate_cyclic(n, m, class_filter);
    std::vector<FiniteSubgroup> two = enumerate_two_generator(n, m, class_filter);
    all.insert(all.end(), std::make_move_iterator(two.begin()), std::make_move_iterator(two.end()));
    return all;
}

std::vector<FiniteSubgroup> brute_force_subgroups(long long n, long long m) {
    require_even_ambient(n, m);
    if (n * m > 10000) throw size_error("brute_force_subgroups guard: n*m must be <= 10^4");
    const int N = static_cast<int>(n), M = static_cast<int>(m);
    const int total = N * M;
    auto ord = [&](int idx) {
        const int i = idx / M, j = idx % M;
        return static_cast<int>(
            lcm_ll(n / gcd_ll(i, n), m / gcd_ll(j, m)));
    };
    auto add = [&](int x, int y) {
        const int i = (x / M + y / M) % N;
        const int j = (x % M + y % M) % M;
        return i * M + j;
    };

    std::map<std::vector<int>, std::pair<int, int>> found; // element set -> generating pair
    std::vector<char> seen(static_cast<std::size_t>(total));
    for (int g = 0; g < total; ++g) {
        const int og = ord(g);
        for (int h = g; h < total; ++h) {
            const int oh = ord(h);
            std::fill(seen.begin(), seen.end(), 0);
            std::vector<int> els;
            int x = 0;
            for (int i = 0; i < og; ++i, x = add(x, g)) {
                int y = x;
                for (int j = 0; j < oh; ++j, y = add(y, h)) {
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        els.push_back(y);
                    }
                }
            }
            std::sort(els.begin(), els.end());
            found.emplace(std::move(els), std::make_pair(g, h));
        }
    }

    std::vector<FiniteSubgroup> out;
    out.reserve(found.size());
    for (const auto& [els, gens] : found) {
        const std::size_t size = els.size();
        std::vector<GroupElement> gvec;
        // prefer a single generator when the subgroup is cyclic
        int cyclic_gen = -1;
        for (int e : els) {
            if (static_cast<std::size_t>(ord(e)) == size) {
                cyclic_gen = e;
                break;
            }
        }
        if (cyclic_gen >= 0) {
            gvec.push_back(GroupElement::from_indices(cyclic_gen / M, cyclic_gen % M, n, m));
        } else {
            // lexicographically first internal direct-product pair
            bool done = false;
            for (std::size_t i = 0; i < els.size() && !done; ++i) {
                for (std::size_t j = 0; j < els.size() && !done; ++j) {
                    const int g = els[i], h = els[j];
                    if (static_cast<std::size_t>(ord(g)) * static_cast<std::size_t>(ord(h)) !=
                        size)
                        continue;
                    std::fill(seen.begin(), seen.end(), 0);
                    std::size_t count = 0;
                    int x = 0;
                    for (int u = 0; u < ord(g); ++u, x = add(x, g)) {
                        int y = x;
                        for (int v = 0; v < ord(h); ++v, y = add(y, h)) {
                            if (!seen[static_cast<std::size_t>(y)]) {
                                seen[static_cast<std::size_t>(y)] = 1;
                                ++count;
                            }
                        }
                    }
                    if (count == size) {
                        gvec.push_back(GroupElement::from_indices(g / M, g % M, n, m));
                        gvec.push_back(GroupElement::from_indices(h / M, h % M, n, m));
                        done = true;
                    }
                }
            }
            if (!done) throw std::logic_error("no rank-2 decomposition found for a subgroup");
        }
        FiniteSubgroup f;
        f.ambient_n = n;
        f.ambient_m = m;
        f.generators = std::move(gvec);
        f.elements.reserve(size);
        for (int e : els) f.elements.push_back(GroupElement::from_indices(e / M, e % M, n, m));
        std::sort(f.elements.begin(), f.elements.end());
        f.order = static_cast<long long>(size);
        f.class_tag = classify(n, m, f.elements);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), element_set_less);
    return out;
}

} // namespace hb
