#include "oracle.hpp"

namespace oracle {

namespace {

// DFS over height matrices pi(i,j), filled row-major, each entry bounded by
// the entry above and to the left.
long count_heights(std::vector<std::vector<int>>& h, int i, int j, int remaining, int n) {
    if (remaining == 0) {
        // all later cells zero: valid completion
        return 1;
    }
    if (i == n) return 0;
    const int ni = (j + 1 == n) ? i + 1 : i;
    const int nj = (j + 1 == n) ? 0 : j + 1;
    const int above = i > 0 ? h[i - 1][j] : remaining;
    const int left = j > 0 ? h[i][j - 1] : remaining;
    const int cap = std::min({above, left, remaining});
    long total = 0;
    for (int v = 0; v <= cap; ++v) {
        h[i][j] = v;
        total += count_heights(h, ni, nj, remaining - v, n);
    }
    h[i][j] = 0;
    return total;
}

}  // namespace

long naive_partition_count(int n) {
    if (n == 0) return 1;
    std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
    return count_heights(h, 0, 0, n, n);
}

dt::QSeries macmahon_product(int order) {
    dt::QSeries M = dt::QSeries::constant('q', order, dt::Rational::one());
    for (int m = 1; m <= order; ++m) {
        // (1 - q^m)^{-m} = (sum_j q^{jm})^m, truncated
        dt::QSeries geo('q', order);
        for (int j = 0; j * m <= order; ++j) geo.at(j * m) = dt::Rational::one();
        for (int rep = 0; rep < m; ++rep) M = M * geo;
    }
    return M;
}

NaivePoly naive_add(const NaivePoly& a, const NaivePoly& b) {
    NaivePoly r = a;
    for (const auto& [e, c] : b) {
        r[e] += c;
        if (r[e] == 0) r.erase(e);
    }
    return r;
}

NaivePoly naive_neg(const NaivePoly& a) {
    NaivePoly r;
    for (const auto& [e, c] : a) r[e] = -c;
    return r;
}

NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
    NaivePoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            NaiveExp e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
            if (r[e] == 0) r.erase(e);
        }
    return r;
}

NaivePoly naive_bar(const NaivePoly& a) {
    NaivePoly r;
    for (const auto& [e, c] : a) {
        NaiveExp ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
        r[ne] = c;
    }
    return r;
}

NaivePoly naive_vertex(const dt::ColoredPartition& P) {
    const int r = P.rank();
    const std::size_t width = static_cast<std::size_t>(3 + r);
    auto mono = [&](long a, long b, long c, int wi, long we) {
        NaiveExp e(width, 0);
        e[0] = a;
        e[1] = b;
        e[2] = c;
        if (wi >= 0) e[static_cast<std::size_t>(3 + wi)] += we;
        NaivePoly p;
        p[e] = 1;
        return p;
    };
    // Q_i as naive polynomials
    std::vector<NaivePoly> Q;
    for (const auto& part : P.parts) {
        NaivePoly q;
        for (const auto& box : part.boxes()) {
            NaiveExp e(width, 0);
            e[0] = box[0];
            e[1] = box[1];
            e[2] = box[2];
            q[e] += 1;
        }
        Q.push_back(q);
    }
    const NaivePoly tinv = mono(-1, -1, -1, -1, 0);
    NaivePoly poly;  // (1-t1)(1-t2)(1-t3)
    {
        NaivePoly f1 = naive_add(mono(0, 0, 0, -1, 0), naive_neg(mono(1, 0, 0, -1, 0)));
        NaivePoly f2 = naive_add(mono(0, 0, 0, -1, 0), naive_neg(mono(0, 1, 0, -1, 0)));
        NaivePoly f3 = naive_add(mono(0, 0, 0, -1, 0), naive_neg(mono(0, 0, 1, -1, 0)));
        poly = naive_mul(naive_mul(f1, f2), f3);
    }
    NaivePoly T;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            NaivePoly w = naive_mul(mono(0, 0, 0, i, -1), mono(0, 0, 0, j, 1));
            NaivePoly inner = Q[static_cast<std::size_t>(j)];
            inner = naive_add(inner, naive_neg(naive_mul(naive_bar(Q[static_cast<std::size_t>(i)]), tinv)));
            inner = naive_add(inner, naive_mul(naive_mul(naive_mul(poly, Q[static_cast<std::size_t>(j)]), naive_bar(Q[static_cast<std::size_t>(i)])), tinv));
            T = naive_add(T, naive_mul(w, inner));
        }
    return T;
}

}  // namespace oracle
