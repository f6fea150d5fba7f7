#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxq {

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/* Cap on brute-force enumerations (group balls, parabolic subgroups, word
 * lists), overridable through COXQ_MAX_BALL. */
inline long long max_ball_size() {
    if (const char* env = std::getenv("COXQ_MAX_BALL")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 2'000'000;
}

enum class Automorphism { identity, flip };

/* An element of the affine symmetric group of rank n: a bijection w of Z with
 * w(i+n) = w(i)+n whose window values w(1),...,w(n) sum to n(n+1)/2.  The
 * window determines w, covers each residue class mod n exactly once, and is
 * the canonical identity of the element everywhere in this library. */
class AffinePermutation {
public:
    static AffinePermutation identity(int n) {
        check_rank(n);
        std::vector<long long> win(static_cast<size_t>(n));
        std::iota(win.begin(), win.end(), 1);
        return AffinePermutation(n, std::move(win));
    }

    static AffinePermutation from_window(int n, std::vector<long long> window) {
        check_rank(n);
        if (static_cast<int>(window.size()) != n) {
            throw std::invalid_argument("from_window: window length must equal the rank");
        }
        long long sum = 0;
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (long long v : window) {
            sum += v;
            long long r = v - n * floor_div(v - 1, n) - 1;  // residue in [0, n)
            if (seen[static_cast<size_t>(r)]) {
                throw std::invalid_argument("from_window: repeated residue class");
            }
            seen[static_cast<size_t>(r)] = true;
        }
        if (sum != static_cast<long long>(n) * (n + 1) / 2) {
            throw std::invalid_argument("from_window: window sum must be n(n+1)/2");
        }
        return AffinePermutation(n, std::move(window));
    }

    /* The simple generator s_i for 0 <= i <= n-1, acting on j in Z by
     * j -> j+1 when j = i, j -> j-1 when j = i+1 (mod n), j -> j otherwise. */
    static AffinePermutation simple_gen(int n, int i) {
        check_rank(n);
        if (i < 0 || i >= n) throw std::invalid_argument("simple_gen: index out of range");
        std::vector<long long> win(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j) {
            long long image = j;
            if ((j - i) % n == 0) {
                image = j + 1;
            } else if ((j - i - 1) % n == 0) {
                image = j - 1;
            }
            win[static_cast<size_t>(j - 1)] = image;
        }
        return AffinePermutation(n, std::move(win));
    }

    int rank() const { return n_; }
    const std::vector<long long>& window() const { return win_; }

    /* w(i) for arbitrary i, by periodicity w(i+kn) = w(i)+kn. */
    long long apply(long long i) const {
        long long k = floor_div(i - 1, n_);
        return win_[static_cast<size_t>(i - k * n_ - 1)] + k * n_;
    }

    bool is_identity() const {
        for (int i = 1; i <= n_; ++i) {
            if (win_[static_cast<size_t>(i - 1)] != i) return false;
        }
        return true;
    }

    AffinePermutation inverse() const {
        std::vector<long long> win(static_cast<size_t>(n_));
        for (int j = 1; j <= n_; ++j) {
            long long v = win_[static_cast<size_t>(j - 1)];
            long long r = v - n_ * floor_div(v - 1, n_);  // v's residue representative in [1, n]
            win[static_cast<size_t>(r - 1)] = j + (r - v);
        }
        return AffinePermutation(n_, std::move(win));
    }

    /* Conjugation by the order-reversing map i -> n+1-i of Z, which realizes
     * the flip of the affine diagram: s_0 -> s_0 and s_i -> s_{n-i}. */
    AffinePermutation star() const {
        std::vector<long long> win(static_cast<size_t>(n_));
        for (int i = 1; i <= n_; ++i) {
            win[static_cast<size_t>(i - 1)] = n_ + 1 - win_[static_cast<size_t>(n_ - i)];
        }
        return AffinePermutation(n_, std::move(win));
    }

    friend AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
        if (u.n_ != v.n_) throw std::invalid_argument("compose: rank mismatch");
        std::vector<long long> win(static_cast<size_t>(u.n_));
        for (int i = 1; i <= u.n_; ++i) {
            win[static_cast<size_t>(i - 1)] = u.apply(v.win_[static_cast<size_t>(i - 1)]);
        }
        return AffinePermutation(u.n_, std::move(win));
    }

    friend bool operator==(const AffinePermutation& a, const AffinePermutation& b) {
        return a.n_ == b.n_ && a.win_ == b.win_;
    }

    friend bool operator<(const AffinePermutation& a, const AffinePermutation& b) {
        return a.win_ < b.win_;
    }

private:
    AffinePermutation(int n, std::vector<long long> win) : n_(n), win_(std::move(win)) {}

    static void check_rank(int n) {
        if (n < 2) throw std::invalid_argument("AffinePermutation: rank must be at least 2");
    }

    int n_;
    std::vector<long long> win_;
};

/* Coxeter length as the inversion count #{(i,j) in Z x [n] : i<j, w(i)>w(j)}.
 * For residue classes a,b the admissible shifts t form an open interval, so
 * each (a,b) contributes floor((b-a)/n) - floor((w(b)-w(a))/n) when positive.
 * Gated against the breadth-first oracle in the test suite. */
inline long long length(const AffinePermutation& w) {
    int n = w.rank();
    long long total = 0;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            long long hi = floor_div(b - a, n);
            long long lo = floor_div(w.apply(b) - w.apply(a), n);
            if (hi > lo) total += hi - lo;
        }
    }
    return total;
}

/* l(w s_i) < l(w) iff w(i) > w(i+1), reading w(0) = w(n) - n. */
inline bool has_right_descent(const AffinePermutation& w, int i) {
    int n = w.rank();
    if (i < 0 || i >= n) throw std::invalid_argument("has_right_descent: index out of range");
    long long left = (i == 0) ? w.window()[static_cast<size_t>(n - 1)] - n : w.window()[static_cast<size_t>(i - 1)];
    long long right = w.window()[static_cast<size_t>(i)];
    return left > right;
}

inline bool is_involution(const AffinePermutation& w) {
    return compose(w, w).is_identity();
}

inline bool is_twisted_involution(const AffinePermutation& w, Automorphism aut) {
    return aut == Automorphism::identity ? is_involution(w) : w.star() == w.inverse();
}

/* Absolute length of an involution: half the number of non-fixed window
 * positions. */
inline long long absolute_length_involution(const AffinePermutation& w) {
    if (!is_involution(w)) throw std::invalid_argument("absolute_length_involution: input is not an involution");
    int n = w.rank();
    long long fixed = 0;
    for (int i = 1; i <= n; ++i) {
        if (w.window()[static_cast<size_t>(i - 1)] == i) ++fixed;
    }
    return (n - fixed) / 2;
}

/* Twisted absolute length for the diagram flip:
 * floor(#{i in [n] : w(i) = 1-i mod n} / 2). */
inline long long twisted_absolute_length(const AffinePermutation& w) {
    if (!is_twisted_involution(w, Automorphism::flip)) {
        throw std::invalid_argument("twisted_absolute_length: input is not a *-twisted involution");
    }
    int n = w.rank();
    long long hits = 0;
    for (int i = 1; i <= n; ++i) {
        long long diff = w.window()[static_cast<size_t>(i - 1)] - (1 - i);
        if (diff % n == 0) ++hits;
    }
    return hits / 2;
}

inline int gen_image(int n, int i, Automorphism aut) {
    if (aut == Automorphism::identity || i == 0) return i;
    return n - i;
}

/* Defining recursion for the twisted absolute length: it vanishes at the
 * identity, is constant on twisted conjugacy classes, and moves in step with
 * l under right multiplication by descents that stay inside the twisted
 * involutions.  Each step shortens w, so this terminates. */
inline long long hultman_absolute_length(const AffinePermutation& w_in, Automorphism aut) {
    if (!is_twisted_involution(w_in, aut)) {
        throw std::invalid_argument("hultman_absolute_length: input is not a twisted involution");
    }
    AffinePermutation w = w_in;
    int n = w.rank();
    long long value = 0;
    while (!w.is_identity()) {
        int i = -1;
        for (int j = 0; j < n; ++j) {
            if (has_right_descent(w, j)) {
                i = j;
                break;
            }
        }
        assert(i >= 0);
        AffinePermutation s = AffinePermutation::simple_gen(n, i);
        AffinePermutation s_star = AffinePermutation::simple_gen(n, gen_image(n, i, aut));
        AffinePermutation conj = compose(s_star, compose(w, s));
        if (!(conj == w)) {
            w = conj;  // twisted conjugation, absolute length unchanged
        } else {
            w = compose(w, s);  // w s_i = s_i^* w, absolute length drops by one
            value += 1;
        }
    }
    return value;
}

/* Ball of radius L in the word metric: breadth-first closure of {1} under
 * right multiplication by the simple generators, grouped by length. */
inline std::vector<std::vector<AffinePermutation>> enumerate_upto(int n, long long L) {
    if (L < 0) throw std::invalid_argument("enumerate_upto: negative radius");
    std::vector<std::vector<AffinePermutation>> layers;
    std::set<std::vector<long long>> seen;
    long long cap = max_ball_size();
    layers.push_back({AffinePermutation::identity(n)});
    seen.insert(AffinePermutation::identity(n).window());
    std::vector<AffinePermutation> gens;
    for (int i = 0; i < n; ++i) gens.push_back(AffinePermutation::simple_gen(n, i));
    for (long long depth = 1; depth <= L; ++depth) {
        std::vector<AffinePermutation> next;
        for (const AffinePermutation& w : layers.back()) {
            for (const AffinePermutation& s : gens) {
                AffinePermutation ws = compose(w, s);
                if (seen.insert(ws.window()).second) {
                    next.push_back(ws);
                    if (static_cast<long long>(seen.size()) > cap) {
                        throw std::runtime_error("enumerate_upto: ball exceeds COXQ_MAX_BALL");
                    }
                }
            }
        }
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(next));
    }
    return layers;
}

/* ---- window I/O -------------------------------------------------------- */

inline std::string to_csv(const AffinePermutation& w) {
    std::string out;
    for (size_t i = 0; i < w.window().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.window()[i]);
    }
    return out;
}

inline AffinePermutation window_from_csv(const std::string& text) {
    std::vector<long long> win;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("window_from_csv: bad entry '" + item + "'");
        win.push_back(v);
    }
    int n = static_cast<int>(win.size());
    return AffinePermutation::from_window(n, std::move(win));
}

inline std::string to_json(const AffinePermutation& w) {
    std::string out = "{\"n\":" + std::to_string(w.rank()) + ",\"window\":[";
    for (size_t i = 0; i < w.window().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.window()[i]);
    }
    return out + "]}";
}

}  // namespace coxq
