#include "gallai/bounds.hpp"

#include <algorithm>

#include "gallai/errors.hpp"

namespace gallai {

std::string to_string(BoundInt v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BoundResult BoundResult::exact(BoundInt v, std::string id, std::vector<std::string> notes) {
    if (v < 1) throw Error(ErrorCode::InternalInconsistency, "exact bound below 1");
    return BoundResult{Kind::Exact, v, v, std::move(id), std::move(notes)};
}

BoundResult BoundResult::interval(BoundInt lo, BoundInt hi, std::string id, std::vector<std::string> notes) {
    if (lo > hi) throw Error(ErrorCode::InternalInconsistency, "interval with lo > hi");
    return BoundResult{Kind::Interval, lo, hi, std::move(id), std::move(notes)};
}

namespace {

BoundInt add(BoundInt a, BoundInt b) {
    BoundInt r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "bound arithmetic overflow");
    return r;
}

BoundInt sub(BoundInt a, BoundInt b) {
    BoundInt r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "bound arithmetic overflow");
    return r;
}

BoundInt mul(BoundInt a, BoundInt b) {
    BoundInt r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "bound arithmetic overflow");
    return r;
}

BoundInt power(BoundInt base, std::size_t e) {
    BoundInt r = 1;
    while (e--) r = mul(r, base);
    return r;
}

// base^(twice_exp / 2); the exponent must be integral on every branch that uses it
BoundInt power_half(BoundInt base, std::size_t twice_exp) {
    if (twice_exp % 2 != 0) throw Error(ErrorCode::InternalInconsistency, "half-integer exponent");
    return power(base, twice_exp / 2);
}

BoundInt big(std::size_t v) { return static_cast<BoundInt>(v); }

// Exact p / 2 with floor or ceiling.
BoundInt half_floor(BoundInt p) { return p >= 0 ? p / 2 : -((-p + 1) / 2); }

std::string num(BoundInt v) { return to_string(v); }

}  // namespace

BoundResult ramsey_cycle(std::size_t m, std::size_t n) {
    if (m < 3) throw Error(ErrorCode::ParameterOutOfRange, "cycle order must be at least 3");
    if (m > n) throw Error(ErrorCode::ArgumentOrder, "ramsey_cycle expects m <= n");
    if (m == 3 && n == 3)
        return BoundResult::exact(6, "ramsey-cycle:exception",
                                  {"(3,3) is excluded from the odd branch, whose formula 2n-1 would give 5; R(C3,C3) = 6"});
    if (m == 4 && n == 4)
        return BoundResult::exact(
            6, "ramsey-cycle:exception",
            {"the even branch n-1+m/2 would give 5, refuted by exhaustive search (R(C4,C4) = 6)",
             "the printed exception on the even branch reads (3,3), which cannot occur there; (4,4) assumed"});
    const BoundInt bm = big(m), bn = big(n);
    if (m % 2 == 1) return BoundResult::exact(sub(mul(2, bn), 1), "ramsey-cycle:odd-m");
    const BoundInt even = add(sub(bn, 1), bm / 2);
    if (n % 2 == 0) return BoundResult::exact(even, "ramsey-cycle:even-even");
    return BoundResult::exact(std::max(even, sub(mul(2, bm), 1)), "ramsey-cycle:even-odd");
}

BoundResult ramsey_wheel(std::size_t n) {
    if (n < 5) throw Error(ErrorCode::ParameterOutOfRange, "ramsey_wheel needs n >= 5");
    if (n == 5) return BoundResult::exact(15, "ramsey-wheel:w5");
    if (n == 6) return BoundResult::exact(17, "ramsey-wheel:w6");
    const BoundInt bn = big(n);
    if (n % 2 == 0) {
        const BoundInt t = big((n - 2) / 2);
        const BoundInt lo = sub(mul(3, bn), 3), hi = sub(mul(8, bn), 10);
        const BoundInt lemma_lo = add(mul(6, t), 4), lemma_hi = add(mul(16, t), 6);
        std::vector<std::string> notes;
        if (lemma_lo != lo)
            notes.push_back("lemma form 6t+4 = " + num(lemma_lo) + " (t = " + num(t) + ") differs from 3n-3 = " + num(lo) +
                            "; interval uses 3n-3");
        if (lemma_hi != hi) notes.push_back("lemma form 16t+6 = " + num(lemma_hi) + " differs from 8n-10 = " + num(hi));
        return BoundResult::interval(lo, hi, "ramsey-wheel:even", std::move(notes));
    }
    const BoundInt t = big((n - 1) / 2);
    const BoundInt lo = sub(mul(2, bn), 2), hi = sub(mul(6, bn), 8);
    const BoundInt lemma_lo = add(mul(4, t), 1), lemma_hi = sub(mul(12, t), 2);
    std::vector<std::string> notes;
    if (lemma_lo != lo)
        notes.push_back("lemma form 4t+1 = " + num(lemma_lo) + " (t = " + num(t) + ") differs from 2n-2 = " + num(lo) +
                        "; interval uses 2n-2");
    if (lemma_hi != hi) notes.push_back("lemma form 12t-2 = " + num(lemma_hi) + " differs from 6n-8 = " + num(hi));
    notes.push_back("the odd-case upper-bound argument is run in K_{16t+6} = K_" + num(add(mul(16, t), 6)) +
                    " while the stated bound is 12t-2 = " + num(lemma_hi));
    return BoundResult::interval(lo, hi, "ramsey-wheel:odd", std::move(notes));
}

BoundResult gr_w5(std::size_t k) {
    if (k < 1) throw Error(ErrorCode::ParameterOutOfRange, "k must be at least 1");
    if (k == 1) return BoundResult::exact(5, "gr-w5:k1");
    if (k % 2 == 0) return BoundResult::exact(add(mul(14, power_half(5, k - 2)), 1), "gr-w5:even");
    return BoundResult::exact(add(mul(28, power_half(5, k - 3)), 1), "gr-w5:odd");
}

BoundResult gr_wheel_bounds(std::size_t n, std::size_t k) {
    if (n < 6 || k < 2) throw Error(ErrorCode::ParameterOutOfRange, "gr_wheel_bounds needs n >= 6 and k >= 2");
    const BoundInt bn = big(n), bk = big(k);
    const bool even_n = n % 2 == 0, even_k = k % 2 == 0;
    BoundInt block = 0, achieved_block = 0;
    std::string id = "gr-wheel:";
    if (even_k) {
        block = even_n ? sub(mul(3, bn), 4) : sub(mul(2, bn), 3);
        achieved_block = even_n ? sub(mul(3, bn), 3) : sub(mul(2, bn), 2);
        block = mul(block, power_half(5, k - 2));
        achieved_block = mul(achieved_block, power_half(5, k - 2));
    } else {
        block = even_n ? sub(mul(6, bn), 8) : sub(mul(4, bn), 6);
        achieved_block = even_n ? sub(mul(6, bn), 6) : sub(mul(4, bn), 4);
        block = mul(block, power_half(5, k - 3));
        achieved_block = mul(achieved_block, power_half(5, k - 3));
    }
    id += even_n ? "even-n-" : "odd-n-";
    id += even_k ? "even-k" : "odd-k";
    const BoundInt lo = add(block, 1);
    const BoundInt hi = add(mul(power(sub(bn, 4), 2), power(30, k)), mul(bk, sub(bn, 1)));
    std::vector<std::string> notes;
    notes.push_back("the wheel-join tower reaches order " + num(achieved_block) + " against the formula's " + num(block) +
                    "; the formula value is reported");
    if (k < 3) notes.push_back("upper bound (n-4)^2 * 30^k + k(n-1) is stated for k >= 3 only");
    return BoundResult::interval(lo, hi, id, std::move(notes));
}

BoundResult gr_mixed_upper(std::size_t n, std::size_t r, std::size_t s, std::size_t t) {
    const std::size_t k = r + s + t;
    if (n < 6 || k < 1) throw Error(ErrorCode::ParameterOutOfRange, "gr_mixed_upper needs n >= 6 and r+s+t >= 1");
    const BoundInt bn = big(n);
    const BoundInt value = add(mul(mul(mul(power(sub(bn, 4), 2), power(30, r)), power(10, s)), power(2, t)),
                               mul(big(k), sub(bn, 1)));
    return BoundResult::interval(
        1, value, "gr-mixed",
        {"upper bound only", "the proof sizes its host graph with k(n+1) where the statement has k(n-1); statement reported"});
}

BoundResult gr_odd_cycle(std::size_t l, std::size_t k) {
    if (l < 1 || k < 1) throw Error(ErrorCode::ParameterOutOfRange, "gr_odd_cycle needs l >= 1 and k >= 1");
    std::vector<std::string> notes;
    if (l < 3) notes.push_back("the formula is established for l >= 3; l = " + std::to_string(l) + " is outside it");
    return BoundResult::exact(add(mul(big(l), power(2, k)), 1), "gr-odd-cycle", std::move(notes));
}

BoundResult gr_fan(std::size_t n, std::size_t k) {
    if (n < 2 || k < 2) throw Error(ErrorCode::ParameterOutOfRange, "gr_fan needs n >= 2 and k >= 2");
    const BoundInt bn = big(n);
    if (n == 2) {
        if (k == 2) return BoundResult::exact(9, "gr-fan:f2-k2");
        if (k % 2 == 0) {
            // 83/2 * 5^((k-4)/2) + 1/2
            const BoundInt twice = add(mul(83, power_half(5, k - 4)), 1);
            if (twice % 2 != 0) throw Error(ErrorCode::InternalInconsistency, "non-integral fan value");
            return BoundResult::exact(twice / 2, "gr-fan:f2-even");
        }
        return BoundResult::exact(add(mul(4, power_half(5, k - 1)), 1), "gr-fan:f2-odd");
    }
    // Bounds carry halves; both ends are computed as exact multiples of 1/2.
    BoundInt lo = 0, twice_hi = 0;
    std::string id;
    if (k % 2 == 0) {
        const BoundInt p = power_half(5, k - 2);
        lo = add(mul(mul(4, bn), p), 1);
        twice_hi = add(sub(mul(mul(20, bn), p), mul(5, bn)), 2);  // 2 * (10n p - 5n/2 + 1)
        id = "gr-fan:even-k";
    } else {
        const BoundInt p = power_half(5, k - 1);
        lo = add(mul(mul(2, bn), p), 1);
        twice_hi = add(sub(mul(mul(9, bn), p), mul(5, bn)), 2);  // 2 * (9/2 n p - 5n/2 + 1)
        id = "gr-fan:odd-k";
    }
    std::vector<std::string> notes;
    if (twice_hi % 2 != 0) notes.push_back("upper formula is a half-integer; rounded down");
    return BoundResult::interval(lo, half_floor(twice_hi), id, std::move(notes));
}

}  // namespace gallai
