#include "multiseq/hilbert.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "multiseq/errors.hpp"

namespace multiseq {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw internal_error("64-bit overflow in series arithmetic");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw internal_error("64-bit overflow in series arithmetic");
    return r;
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        // exact at every step: r * (n-k+i) is divisible by i
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

long long BivariateSeries::coefficient(int u, int v) const {
    long long total = 0;
    for (const auto& [deg, c] : numerator) {
        const auto [a, b] = deg;
        if (a > u || b > v) continue;
        long long ways1 = den1 > 0 ? binomial(u - a + den1 - 1, den1 - 1) : (u == a ? 1 : 0);
        long long ways2 = den2 > 0 ? binomial(v - b + den2 - 1, den2 - 1) : (v == b ? 1 : 0);
        total = checked_add(total, checked_mul(c, checked_mul(ways1, ways2)));
    }
    return total;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree();
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

namespace {

using Numerator = std::map<std::pair<int, int>, long long>;

void add_term(Numerator& n, int a, int b, long long c) {
    auto [it, fresh] = n.emplace(std::pair{a, b}, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) n.erase(it);
    }
}

Numerator multiply(const Numerator& x, const Numerator& y) {
    Numerator r;
    for (const auto& [da, ca] : x)
        for (const auto& [db, cb] : y)
            add_term(r, da.first + db.first, da.second + db.second, checked_mul(ca, cb));
    return r;
}

struct RecursionContext {
    const std::vector<int>* axis;
    int nvars;
    std::unordered_map<std::string, Numerator> memo;

    std::pair<int, int> bidegree(const Monomial& m) const {
        int a = 0, b = 0;
        for (int i = 0; i < nvars; ++i) {
            if ((*axis)[i] == 0)
                a += m.exponent(i);
            else
                b += m.exponent(i);
        }
        return {a, b};
    }

    std::string key(const std::vector<Monomial>& gens) const {
        std::string k;
        k.reserve(gens.size() * nvars * 2);
        for (const auto& m : gens) {
            for (int i = 0; i < nvars; ++i) {
                unsigned e = m.exponent(i);
                k.push_back(static_cast<char>(e & 0xff));
                k.push_back(static_cast<char>((e >> 8) & 0xff));
            }
            k.push_back('\x01');
        }
        return k;
    }
};

/// Canonical sort so memo keys are stable.
void sort_monomials(std::vector<Monomial>& gens, int nvars) {
    std::sort(gens.begin(), gens.end(), [nvars](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = 0; i < nvars; ++i)
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
        return false;
    });
}

Numerator numerator_rec(std::vector<Monomial> gens, RecursionContext& ctx) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {{{0, 0}, 1}};
    if (gens.size() == 1 && gens[0].is_one()) return {};
    sort_monomials(gens, ctx.nvars);

    const std::string key = ctx.key(gens);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) {
                pairwise_coprime = false;
                break;
            }

    Numerator result;
    if (pairwise_coprime) {
        result = {{{0, 0}, 1}};
        for (const auto& g : gens) {
            auto [a, b] = ctx.bidegree(g);
            Numerator factor = {{{0, 0}, 1}};
            add_term(factor, a, b, -1);
            result = multiply(result, factor);
        }
    } else {
        // pivot: variable hitting the most generators, smallest positive
        // exponent among them
        int best_var = -1, best_count = 0;
        for (int v = 0; v < ctx.nvars; ++v) {
            int count = 0;
            for (const auto& g : gens) count += g.exponent(v) ? 1 : 0;
            if (count > best_count) {
                best_count = count;
                best_var = v;
            }
        }
        unsigned e = 0;
        for (const auto& g : gens)
            if (g.exponent(best_var))
                e = e ? std::min(e, g.exponent(best_var)) : g.exponent(best_var);
        Monomial pivot = Monomial::variable(best_var, e);

        // quotient branch: gens : pivot
        std::vector<Monomial> quot;
        quot.reserve(gens.size());
        for (const auto& g : gens) quot.push_back(g / gcd(g, pivot));
        // sum branch: gens + pivot
        std::vector<Monomial> sum = gens;
        sum.push_back(pivot);

        result = numerator_rec(std::move(sum), ctx);
        Numerator qn = numerator_rec(std::move(quot), ctx);
        auto [pa, pb] = ctx.bidegree(pivot);
        for (const auto& [deg, c] : qn) add_term(result, deg.first + pa, deg.second + pb, c);
    }

    ctx.memo.emplace(key, result);
    return result;
}

}  // namespace

BivariateSeries bigraded_series(const std::vector<Monomial>& gens, const std::vector<int>& axis) {
    RecursionContext ctx;
    ctx.axis = &axis;
    ctx.nvars = static_cast<int>(axis.size());
    BivariateSeries s;
    for (int v : axis) (v == 0 ? s.den1 : s.den2) += 1;
    s.numerator = numerator_rec(gens, ctx);
    return s;
}

std::vector<long long> univariate_numerator(const std::vector<Monomial>& gens, int nvars) {
    BivariateSeries s = bigraded_series(gens, std::vector<int>(nvars, 0));
    int maxdeg = 0;
    for (const auto& [deg, c] : s.numerator) maxdeg = std::max(maxdeg, deg.first);
    std::vector<long long> out(maxdeg + 1, 0);
    for (const auto& [deg, c] : s.numerator) out[deg.first] = c;
    return out;
}

namespace {

bool is_zero_poly(const std::vector<long long>& p) {
    for (long long c : p)
        if (c) return false;
    return true;
}

long long eval_at_one(const std::vector<long long>& p) {
    long long s = 0;
    for (long long c : p) s = checked_add(s, c);
    return s;
}

/// Exact division by (1-t); caller guarantees p(1) == 0.
std::vector<long long> divide_one_minus_t(const std::vector<long long>& p) {
    // p = (1-t) q  =>  q_k = p_k + q_{k-1}
    std::vector<long long> q(p.size() ? p.size() - 1 : 0, 0);
    long long carry = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        carry = checked_add(carry, p[k]);
        q[k] = carry;
    }
    return q;
}

}  // namespace

int dimension_from_numerator(const std::vector<long long>& numerator, int nvars) {
    if (is_zero_poly(numerator)) return -1;
    std::vector<long long> h = numerator;
    int cancelled = 0;
    while (eval_at_one(h) == 0) {
        h = divide_one_minus_t(h);
        ++cancelled;
    }
    return nvars - cancelled;
}

long long degree_from_numerator(const std::vector<long long>& numerator, int nvars) {
    if (is_zero_poly(numerator)) return 0;
    std::vector<long long> h = numerator;
    while (eval_at_one(h) == 0) h = divide_one_minus_t(h);
    (void)nvars;
    return eval_at_one(h);
}

long long hilbert_function(const std::vector<long long>& numerator, int nvars, int w) {
    if (w < 0) return 0;
    long long total = 0;
    for (std::size_t a = 0; a < numerator.size() && static_cast<int>(a) <= w; ++a) {
        if (!numerator[a]) continue;
        total = checked_add(total,
                            checked_mul(numerator[a], binomial(w - a + nvars - 1, nvars - 1)));
    }
    return total;
}

long long total_length(const std::vector<long long>& numerator, int nvars) {
    if (is_zero_poly(numerator)) return 0;
    std::vector<long long> h = numerator;
    for (int i = 0; i < nvars; ++i) {
        if (eval_at_one(h) != 0)
            throw precondition_error("total length of a positive-dimensional quotient");
        h = divide_one_minus_t(h);
    }
    return eval_at_one(h);
}

std::map<std::pair<int, int>, mpz_class> binomial_basis_rewrite(const BivariateSeries& series) {
    std::map<std::pair<int, int>, mpz_class> out;
    for (const auto& [deg, c] : series.numerator) {
        const auto [a, b] = deg;
        // t1^a t2^b = (1-s1)^a (1-s2)^b with s = 1-t
        const mpz_class cz(static_cast<long>(c));
        for (int j = 0; j <= a; ++j) {
            mpz_class cj;
            mpz_bin_uiui(cj.get_mpz_t(), a, j);
            for (int k = 0; k <= b; ++k) {
                mpz_class ck;
                mpz_bin_uiui(ck.get_mpz_t(), b, k);
                mpz_class v = cj * ck * cz;
                if (((j + k) & 1) != 0) v = -v;
                auto [it, fresh] = out.emplace(std::pair{j, k}, v);
                if (!fresh) it->second += v;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

}  // namespace multiseq
