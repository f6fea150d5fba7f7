#pragma once

#include "coxq/bivar.hpp"
#include "coxq/series.hpp"
#include "coxq/affine.hpp"  // max_ball_size

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxq {

/* A reduced word in the universal Coxeter group of rank n: a sequence of
 * generator indices from [n] with no equal adjacent letters.  Since the only
 * relations are s^2 = 1, every such word is reduced and words are in
 * bijection with group elements. */
struct UCWord {
    int n = 0;
    std::vector<int> letters;

    bool valid() const {
        for (size_t i = 0; i < letters.size(); ++i) {
            if (letters[i] < 1 || letters[i] > n) return false;
            if (i > 0 && letters[i] == letters[i - 1]) return false;
        }
        return true;
    }

    size_t length() const { return letters.size(); }

    friend bool operator==(const UCWord& a, const UCWord& b) { return a.n == b.n && a.letters == b.letters; }
};

/* Group product with greedy boundary cancellation; each appended letter can
 * only cancel against the current end of the accumulated word. */
inline UCWord uc_mul(const UCWord& a, const UCWord& b) {
    if (a.n != b.n) throw std::invalid_argument("uc_mul: rank mismatch");
    UCWord r = a;
    for (int letter : b.letters) {
        if (!r.letters.empty() && r.letters.back() == letter) {
            r.letters.pop_back();
        } else {
            r.letters.push_back(letter);
        }
    }
    return r;
}

inline UCWord uc_inverse(const UCWord& a) {
    UCWord r = a;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

/* Involutive permutation of the generator set, stored 1-based: aut[i-1] is
 * the image of generator i. */
using UCAut = std::vector<int>;

inline UCAut uc_identity_aut(int n) {
    UCAut aut(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) aut[static_cast<size_t>(i - 1)] = i;
    return aut;
}

/* Canonical involution fixing exactly f generators: the first n-f are swapped
 * in adjacent pairs and the rest stay put.  Requires n - f even. */
inline UCAut uc_standard_aut(int n, int f) {
    if (f < 0 || f > n || (n - f) % 2 != 0) {
        throw std::invalid_argument("uc_standard_aut: need 0 <= f <= n with n - f even");
    }
    UCAut aut = uc_identity_aut(n);
    for (int i = 1; i + 1 <= n - f; i += 2) {
        aut[static_cast<size_t>(i - 1)] = i + 1;
        aut[static_cast<size_t>(i)] = i;
    }
    return aut;
}

inline int uc_fixed_count(const UCAut& aut) {
    int f = 0;
    for (size_t i = 0; i < aut.size(); ++i) {
        if (aut[i] == static_cast<int>(i) + 1) ++f;
    }
    return f;
}

inline UCWord uc_apply_aut(const UCAut& aut, const UCWord& w) {
    UCWord r = w;
    for (int& letter : r.letters) letter = aut[static_cast<size_t>(letter - 1)];
    return r;
}

/* w is a twisted involution iff w^{-1} = w^*, i.e. the reversed word equals
 * the letterwise image under the automorphism. */
inline bool uc_is_twisted_involution(const UCAut& aut, const UCWord& w) {
    size_t len = w.letters.size();
    for (size_t i = 0; i < len; ++i) {
        if (w.letters[len - 1 - i] != aut[static_cast<size_t>(w.letters[i] - 1)]) return false;
    }
    return true;
}

/* Twisted absolute length on U_n: a twisted involution has a reduced word
 * u r u^* with central fixed letter r (odd length, value 1) or u s (s u)^*
 * with s not fixed (even length, value 0). */
inline long long uc_twisted_abs_length(const UCAut& aut, const UCWord& w) {
    if (!uc_is_twisted_involution(aut, w)) {
        throw std::invalid_argument("uc_twisted_abs_length: input is not a twisted involution");
    }
    return w.letters.size() % 2 == 0 ? 0 : 1;
}

/* Defining recursion for the twisted absolute length, used as an oracle for
 * the parity classification above. */
inline long long uc_hultman(const UCAut& aut, const UCWord& w_in) {
    if (!uc_is_twisted_involution(aut, w_in)) {
        throw std::invalid_argument("uc_hultman: input is not a twisted involution");
    }
    UCWord w = w_in;
    long long value = 0;
    while (!w.letters.empty()) {
        UCWord s{w.n, {w.letters.back()}};
        UCWord s_star = uc_apply_aut(aut, s);
        UCWord conj = uc_mul(s_star, uc_mul(w, s));
        if (!(conj == w)) {
            w = conj;
        } else {
            w = uc_mul(w, s);
            value += 1;
        }
    }
    return value;
}

/* Visit every reduced word of length at most max_len (including the empty
 * word), in length-lexicographic order. */
inline void uc_for_each_word(int n, int max_len, const std::function<void(const UCWord&)>& visit) {
    if (n < 0) throw std::invalid_argument("uc_for_each_word: negative rank");
    long long cap = max_ball_size();
    long long count = 0;
    UCWord w{n, {}};
    std::function<void(int)> rec = [&](int remaining) {
        if (++count > cap) throw std::runtime_error("uc_for_each_word: word count exceeds COXQ_MAX_BALL");
        visit(w);
        if (remaining == 0) return;
        for (int letter = 1; letter <= n; ++letter) {
            if (!w.letters.empty() && w.letters.back() == letter) continue;
            w.letters.push_back(letter);
            rec(remaining - 1);
            w.letters.pop_back();
        }
    };
    rec(max_len);
}

/* ---- word and automorphism I/O ----------------------------------------- */

/* Words print as space-separated generator indices; the empty word prints as
 * "e".  Automorphisms print as their image array. */
inline std::string to_string(const UCWord& w) {
    if (w.letters.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(w.letters[i]);
    }
    return out;
}

inline UCWord uc_word_from_string(int n, const std::string& text) {
    UCWord w{n, {}};
    std::istringstream in(text);
    std::string item;
    while (in >> item) {
        if (item == "e") continue;
        size_t pos = 0;
        int letter = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("uc_word_from_string: bad letter '" + item + "'");
        w.letters.push_back(letter);
    }
    if (!w.valid()) throw std::invalid_argument("uc_word_from_string: not a reduced word");
    return w;
}

inline std::string to_string(const UCAut& aut) {
    std::string out = "[";
    for (size_t i = 0; i < aut.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(aut[i]);
    }
    return out + "]";
}

inline UCAut uc_aut_from_images(int n, const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != n) throw std::invalid_argument("uc_aut_from_images: wrong arity");
    UCAut aut(images.begin(), images.end());
    for (int i = 1; i <= n; ++i) {
        int image = aut[static_cast<size_t>(i - 1)];
        if (image < 1 || image > n) throw std::invalid_argument("uc_aut_from_images: image out of range");
        if (aut[static_cast<size_t>(image - 1)] != i) {
            throw std::invalid_argument("uc_aut_from_images: not an involution");
        }
    }
    return aut;
}

/* ---- closed forms ------------------------------------------------------ */

inline Series uc_closed_P(int n, int order) {
    // (1+q) / (1-(n-1)q)
    Series denom = Series::one(order) - Series::monomial(n - 1, 1, order);
    return (Series::one(order) + Series::monomial(1, 1, order)) * invert(denom);
}

inline Series uc_closed_F(int n, int f, int order) {
    if (f < 0 || f > n || (n - f) % 2 != 0) throw std::invalid_argument("uc_closed_F: invalid fixed count");
    // (1+q) / (1-(f-1)q)
    Series denom = Series::one(order) - Series::monomial(f - 1, 1, order);
    return (Series::one(order) + Series::monomial(1, 1, order)) * invert(denom);
}

inline Series uc_closed_L(int n, int f, int order) {
    if (f < 0 || f > n || (n - f) % 2 != 0) throw std::invalid_argument("uc_closed_L: invalid fixed count");
    // (1+q^2)/(1+q) * (1-(f-1)q)/(1-(n-1)q^2)
    Series num = (Series::one(order) + Series::monomial(1, 2, order)) *
                 (Series::one(order) - Series::monomial(f - 1, 1, order));
    Series denom = (Series::one(order) + Series::monomial(1, 1, order)) *
                   (Series::one(order) - Series::monomial(n - 1, 2, order));
    return num * invert(denom);
}

/* T^J for a parabolic subgroup on j of the n generators:
 * 1 + (n-j) q (1-q)(1+s) / ((1-(j-1)q^2)(1-(n-1)q)). */
inline BivarSeries uc_closed_TJ(int n, int j, int order) {
    if (j < 0 || j > n) throw std::invalid_argument("uc_closed_TJ: need 0 <= j <= n");
    Series denom = (Series::one(order) - Series::monomial(j - 1, 2, order)) *
                   (Series::one(order) - Series::monomial(n - 1, 1, order));
    Series common = Series::monomial(n - j, 1, order) * (Series::one(order) - Series::monomial(1, 1, order)) * invert(denom);
    BivarSeries r = BivarSeries::from_inner(Series::one(order) + common, 1);
    r += BivarSeries::outer_monomial(common, 1, 1);
    return r;
}

/* ---- brute enumerations ------------------------------------------------ */

namespace detail {
inline Series counts_to_series(const std::vector<Int>& counts, int order) {
    std::vector<Int> cs(counts.begin(), counts.end());
    return Series::from_coeffs(std::move(cs), order);
}
}  // namespace detail

inline Series uc_brute_P(int n, int order) {
    std::vector<Int> counts(static_cast<size_t>(order) + 1);
    uc_for_each_word(n, order, [&](const UCWord& w) { counts[w.length()] += 1; });
    return detail::counts_to_series(counts, order);
}

inline Series uc_brute_F(int n, const UCAut& aut, int order) {
    std::vector<Int> counts(static_cast<size_t>(order) + 1);
    uc_for_each_word(n, order, [&](const UCWord& w) {
        for (int letter : w.letters) {
            if (aut[static_cast<size_t>(letter - 1)] != letter) return;
        }
        counts[w.length()] += 1;
    });
    return detail::counts_to_series(counts, order);
}

inline Series uc_brute_L(int n, const UCAut& aut, int order) {
    // counts over twisted involutions in the ball, split by twisted absolute
    // length; each unit contributes one factor of (q-1)/(q+1)
    std::vector<Int> plain(static_cast<size_t>(order) + 1), twisted(static_cast<size_t>(order) + 1);
    uc_for_each_word(n, order, [&](const UCWord& w) {
        if (!uc_is_twisted_involution(aut, w)) return;
        (uc_twisted_abs_length(aut, w) == 0 ? plain : twisted)[w.length()] += 1;
    });
    Series ratio = (Series::monomial(1, 1, order) - Series::one(order)) *
                   invert(Series::monomial(1, 1, order) + Series::one(order));
    return detail::counts_to_series(plain, order) + detail::counts_to_series(twisted, order) * ratio;
}

/* T^J by direct assembly over the double-coset data: the identity datum
 * contributes L of the rank-j parabolic, and each palindrome s_k...s_1...s_k
 * with outer letter outside J contributes with K determined by honest
 * conjugation.  J is taken as the first j generators. */
inline BivarSeries uc_brute_TJ(int n, int j, int order) {
    if (j < 0 || j > n) throw std::invalid_argument("uc_brute_TJ: need 0 <= j <= n");
    UCAut id_aut = uc_identity_aut(n);
    Series s_factor = (Series::one(order) - Series::monomial(1, 1, order)) *
                      invert(Series::one(order) + Series::monomial(1, 1, order));

    // identity datum: K = J, P_J(q^2)/P_K(q^2) = 1, L of U_j
    BivarSeries lj = BivarSeries::from_inner(uc_brute_L(j, uc_identity_aut(j), order), 1);

    Series pj_q2 = substitute_power(uc_brute_P(j, order), 2);

    // palindromic data of odd length 2k-1 <= order
    UCWord path{n, {}};
    std::function<void()> visit_path = [&]() {
        int k = static_cast<int>(path.letters.size());
        if (k >= 1 && path.letters.back() > j) {
            UCWord w{n, {}};
            for (size_t t = path.letters.size(); t-- > 0;) w.letters.push_back(path.letters[t]);
            for (size_t t = 1; t < path.letters.size(); ++t) w.letters.push_back(path.letters[t]);
            if (!uc_is_twisted_involution(id_aut, w)) throw std::logic_error("uc_brute_TJ: palindrome not an involution");
            // K = {i in J : w s_i w lands in J}; empty for these data
            for (int i = 1; i <= j; ++i) {
                UCWord conj = uc_mul(w, uc_mul(UCWord{n, {i}}, w));
                if (conj.letters.size() == 1 && conj.letters[0] <= j) {
                    throw std::logic_error("uc_brute_TJ: unexpected nonempty K");
                }
            }
            Series term = Series::monomial(1, 2 * k - 1, order) * s_factor * pj_q2;
            lj += BivarSeries::outer_monomial(term, 1, 1);
        }
        if (2 * (k + 1) - 1 > order) return;
        for (int letter = 1; letter <= n; ++letter) {
            if (!path.letters.empty() && path.letters.back() == letter) continue;
            path.letters.push_back(letter);
            visit_path();
            path.letters.pop_back();
        }
    };
    visit_path();

    return scale(lj, invert(uc_brute_L(n, id_aut, order)));
}

}  // namespace coxq
