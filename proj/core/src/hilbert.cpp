#include "cayley/hilbert.hpp"

#include <algorithm>
#include <map>

namespace cayley {

namespace {

using ZPoly = std::vector<mpz_class>; // ascending coefficients

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

/// r = a * t^s
ZPoly shift(const ZPoly& a, long s) {
    if (a.empty()) return {};
    ZPoly r(a.size() + static_cast<std::size_t>(s), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(s)] = a[i];
    return r;
}

/// r = a * (1 - t^d)
ZPoly mul_one_minus_power(const ZPoly& a, long d) {
    ZPoly r(a.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
        r[i + static_cast<std::size_t>(d)] -= a[i];
    }
    trim(r);
    return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.exponents() < b.exponents();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool divisible = false;
        for (const auto& kept : out)
            if (kept.divides(m)) { divisible = true; break; }
        if (!divisible) out.push_back(m);
    }
    return out;
}

struct Memo {
    std::map<std::vector<std::vector<int>>, ZPoly> table;
};

ZPoly numerator_rec(const std::vector<Monomial>& gens, std::size_t nvars, Memo& memo) {
    if (gens.empty()) return {1};
    for (const auto& g : gens)
        if (g.is_one()) return {};

    // memo key: sorted exponent vectors
    std::vector<std::vector<int>> key;
    key.reserve(gens.size());
    for (const auto& g : gens) key.push_back(g.exponents());
    std::sort(key.begin(), key.end());
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

    ZPoly result;
    // simple-power / coprime-support base case: product of (1 - t^deg)
    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime(gens[j])) { pairwise_coprime = false; break; }
    if (pairwise_coprime) {
        result = {1};
        for (const auto& g : gens) result = mul_one_minus_power(result, g.total_degree());
    } else {
        // pivot on the most shared variable
        std::vector<int> freq(nvars, 0);
        for (const auto& g : gens)
            for (std::size_t v = 0; v < nvars; ++v)
                if (g[v] > 0) ++freq[v];
        std::size_t pivot = 0;
        for (std::size_t v = 1; v < nvars; ++v)
            if (freq[v] > freq[pivot]) pivot = v;

        // N(I) = N(I + (x)) + t * N(I : x)
        std::vector<Monomial> plus; // minimal gens of I + (x_pivot)
        Monomial xv(nvars);
        xv[pivot] = 1;
        plus.push_back(xv);
        for (const auto& g : gens)
            if (g[pivot] == 0) plus.push_back(g);
        std::vector<Monomial> colon;
        colon.reserve(gens.size());
        for (const auto& g : gens) {
            Monomial c = g;
            if (c[pivot] > 0) c[pivot] -= 1;
            colon.push_back(std::move(c));
        }
        result = add(numerator_rec(minimalize(std::move(plus)), nvars, memo),
                     shift(numerator_rec(minimalize(std::move(colon)), nvars, memo), 1));
    }
    memo.table.emplace(std::move(key), result);
    return result;
}

} // namespace

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    Memo memo;
    return numerator_rec(minimalize(std::move(gens)), nvars, memo);
}

HilbertData hilbert_from_numerator(std::vector<mpz_class> numerator, std::size_t nvars) {
    HilbertData h;
    h.numerator = numerator;
    trim(h.numerator);
    if (h.numerator.empty()) {
        // unit ideal: the quotient is the zero ring
        h.proj_dim = -1;
        h.degree = 0;
        return h;
    }
    ZPoly q = h.numerator;
    std::size_t ones = 0;
    auto eval_at_one = [](const ZPoly& p) {
        mpz_class s = 0;
        for (const auto& c : p) s += c;
        return s;
    };
    while (ones < nvars && eval_at_one(q) == 0) {
        // divide by (1 - t): q_i' = q_i + q'_{i-1}
        ZPoly d(q.size(), 0);
        mpz_class carry = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            carry = q[i] + carry;
            d[i] = carry;
        }
        trim(d);
        q = std::move(d);
        ++ones;
    }
    long dim = static_cast<long>(nvars) - static_cast<long>(ones);
    h.proj_dim = static_cast<int>(dim) - 1;
    mpz_class deg = eval_at_one(q);
    if (!deg.fits_slong_p()) throw Error("degree overflow");
    h.degree = deg.get_si();
    return h;
}

} // namespace cayley
