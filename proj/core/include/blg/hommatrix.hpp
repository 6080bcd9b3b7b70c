#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <vector>

#include "blg/bilabeled.hpp"
#include "blg/graph.hpp"

namespace blg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// Dense matrix indexed by tuples over the target's vertex set: rows by
// l-tuples, columns by k-tuples, a tuple (u_1..u_m) encoding to
// sum u_i * n^(m-i) (first entry most significant).
template <typename T>
struct Mat {
    int n = 0;
    int l = 0;
    int k = 0;
    std::vector<T> e;

    Mat() = default;
    Mat(int n_, int l_, int k_)
        : n(n_), l(l_), k(k_), e(static_cast<size_t>(ipow(n_, l_)) * ipow(n_, k_)) {}

    long long rows() const { return ipow(n, l); }
    long long cols() const { return ipow(n, k); }
    T& at(long long r, long long c) { return e[static_cast<size_t>(r) * cols() + c]; }
    const T& at(long long r, long long c) const { return e[static_cast<size_t>(r) * cols() + c]; }
    bool operator==(const Mat& o) const { return n == o.n && l == o.l && k == o.k && e == o.e; }
};

using HomMatrix = Mat<BigInt>;
using RatMatrix = Mat<Rational>;

template <typename T>
Mat<T> mat_multiply(const Mat<T>& a, const Mat<T>& b) {
    if (a.n != b.n || a.k != b.l) throw std::invalid_argument("matrix multiply: shape mismatch");
    Mat<T> c(a.n, a.l, b.k);
    for (long long r = 0; r < a.rows(); ++r)
        for (long long m = 0; m < a.cols(); ++m) {
            if (a.at(r, m) == 0) continue;
            for (long long s = 0; s < b.cols(); ++s) c.at(r, s) += a.at(r, m) * b.at(m, s);
        }
    return c;
}

template <typename T>
Mat<T> mat_tensor(const Mat<T>& a, const Mat<T>& b) {
    if (a.n != b.n) throw std::invalid_argument("matrix tensor: target mismatch");
    Mat<T> c(a.n, a.l + b.l, a.k + b.k);
    for (long long r1 = 0; r1 < a.rows(); ++r1)
        for (long long c1 = 0; c1 < a.cols(); ++c1)
            for (long long r2 = 0; r2 < b.rows(); ++r2)
                for (long long c2 = 0; c2 < b.cols(); ++c2)
                    c.at(r1 * b.rows() + r2, c1 * b.cols() + c2) = a.at(r1, c1) * b.at(r2, c2);
    return c;
}

template <typename T>
Mat<T> mat_schur(const Mat<T>& a, const Mat<T>& b) {
    if (a.n != b.n || a.l != b.l || a.k != b.k)
        throw std::invalid_argument("matrix schur: shape mismatch");
    Mat<T> c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] *= b.e[i];
    return c;
}

template <typename T>
Mat<T> mat_transpose(const Mat<T>& a) {
    Mat<T> c(a.n, a.k, a.l);
    for (long long r = 0; r < a.rows(); ++r)
        for (long long s = 0; s < a.cols(); ++s) c.at(s, r) = a.at(r, s);
    return c;
}

template <typename T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b) {
    if (a.n != b.n || a.l != b.l || a.k != b.k)
        throw std::invalid_argument("matrix add: shape mismatch");
    Mat<T> c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] += b.e[i];
    return c;
}

template <typename T>
T sum_entries(const Mat<T>& a) {
    T s = 0;
    for (const T& x : a.e) s += x;
    return s;
}

RatMatrix to_rational(const HomMatrix& a);
RatMatrix mat_scale(const RatMatrix& a, const Rational& c);

// Homomorphism counting. Loops behave as expected: an edge may land on a
// loop, a loop needs a loop.
BigInt hom_count(const Graph& k, const Graph& g);
HomMatrix hom_matrix(const BiLabeledGraph& h, const Graph& g);

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> edges;  // tree edges between bag indices
    int width() const;
    void validate(const Graph& g) const;  // throws if not a decomposition of g
};

TreeDecomposition tree_decomposition_minfill(const Graph& g);

// Count homomorphisms k -> g with the vertices in `pins` forced to the given
// images, by dynamic programming over a tree decomposition of k.
BigInt hom_count_dp(const Graph& k, const Graph& g, const std::map<int, int>& pins = {});

// Per-target-vertex counts hom((k, root) -> (g, u)) for all u.
std::vector<BigInt> rooted_hom_profile(const Graph& k, int root, const Graph& g);

}  // namespace blg
