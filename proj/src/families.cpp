#include "matroidkl/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "matroidkl/errors.hpp"
#include "matroidkl/relaxation.hpp"

namespace matroidkl {

namespace {

// Small finite field with full operation tables; q in {2,3,4,5,7,8,9}.
// Non-prime orders use F_p[x]/(m(x)) with m = x^2+x+1 (4), x^3+x+1 (8),
// x^2+1 (9); elements are encoded as base-p digit strings.
struct GF {
    int q;
    std::vector<std::vector<int>> add, mul;
    std::vector<int> inv;

    explicit GF(int order) : q(order) {
        int p, deg, modpoly;  // modpoly: coefficients of m(x) minus leading term
        switch (q) {
            case 2: case 3: case 5: case 7: p = q; deg = 1; modpoly = 0; break;
            case 4: p = 2; deg = 2; modpoly = 0b11; break;   // x^2 = x + 1
            case 8: p = 2; deg = 3; modpoly = 0b011; break;  // x^3 = x + 1
            case 9: p = 3; deg = 2; modpoly = 2; break;      // x^2 = -1 = 2
            default:
                throw UnsupportedFieldOrder("q=" + std::to_string(order));
        }
        auto digits = [&](int v) {
            std::vector<int> d(deg);
            for (int i = 0; i < deg; ++i) { d[i] = v % p; v /= p; }
            return d;
        };
        auto value = [&](std::vector<int> d) {
            // reduce any degree-(2*deg-2) product by the modulus
            for (int i = static_cast<int>(d.size()) - 1; i >= deg; --i) {
                int c = d[i] % p;
                d[i] = 0;
                std::vector<int> md = digits(modpoly);
                for (int j = 0; j < deg; ++j) d[i - deg + j] += c * md[j];
            }
            int v = 0;
            for (int i = deg - 1; i >= 0; --i) v = v * p + ((d[i] % p + p) % p);
            return v;
        };
        add.assign(q, std::vector<int>(q));
        mul.assign(q, std::vector<int>(q));
        inv.assign(q, 0);
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) {
                auto dx = digits(x), dy = digits(y);
                std::vector<int> s(deg), m(2 * deg - 1, 0);
                for (int i = 0; i < deg; ++i) s[i] = (dx[i] + dy[i]) % p;
                for (int i = 0; i < deg; ++i)
                    for (int j = 0; j < deg; ++j) m[i + j] += dx[i] * dy[j];
                add[x][y] = value(s);
                mul[x][y] = value(m);
            }
        for (int x = 1; x < q; ++x)
            for (int y = 1; y < q; ++y)
                if (mul[x][y] == 1) inv[x] = y;
    }
};

// rank of a set of vectors over GF via Gaussian elimination
int gf_rank(const GF& f, std::vector<std::vector<int>> rows) {
    int dim = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int r = 0;
    for (int col = 0; col < dim && r < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        int s = f.inv[rows[r][col]];
        for (int j = col; j < dim; ++j) rows[r][j] = f.mul[s][rows[r][j]];
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            int c = rows[i][col];
            for (int j = col; j < dim; ++j) {
                int sub = f.mul[c][rows[r][j]];
                // x - sub: find additive inverse by table scan (q tiny)
                int neg = 0;
                for (int z = 0; z < f.q; ++z)
                    if (f.add[sub][z] == 0) { neg = z; break; }
                rows[i][j] = f.add[rows[i][j]][neg];
            }
        }
        ++r;
    }
    return r;
}

int graph_components(int vertices, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = vertices;
    for (auto [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) { parent[ru] = rv; --comps; }
    }
    return comps;
}

}  // namespace

Matroid uniform(int k, int n) {
    if (k < 0 || n < 0 || k > n)
        throw BadParameters("uniform needs 0 <= k <= n, got k=" +
                            std::to_string(k) + " n=" + std::to_string(n));
    std::vector<Subset> bases;
    for_each_ksubset(n, k, [&](Subset s) { bases.push_back(s); });
    return Matroid(n, std::move(bases));
}

Matroid boolean_matroid(int n) { return uniform(n, n); }

Matroid v_matroid(int k, int h, int n) {
    if (k < 1 || h < k - 1 || n <= h)
        throw BadParameters("v_matroid needs 1 <= k, h >= k-1, n > h");
    return direct_sum(uniform(k - 1, h), uniform(1, n - h));
}

Matroid graphic(const GraphSpec& g) {
    for (auto [u, v] : g.edges)
        if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
            throw BadParameters("edge endpoint out of range");
    int m = static_cast<int>(g.edges.size());
    if (m > 64) throw GroundSetTooLarge(std::to_string(m) + " edges");
    int rank = g.vertices - graph_components(g.vertices, g.edges);
    std::vector<Subset> bases;
    for_each_ksubset(m, rank, [&](Subset s) {
        // a rank-sized acyclic subset is a spanning forest
        std::vector<int> parent(g.vertices);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e : elements_of(s)) {
            auto [u, v] = g.edges[e];
            int ru = find(u), rv = find(v);
            if (ru == rv) return;
            parent[ru] = rv;
        }
        bases.push_back(s);
    });
    if (bases.empty()) bases.push_back(0);  // edgeless graph: rank-0 matroid
    return Matroid(m, std::move(bases));
}

Matroid thagomizer(int n) {
    if (n < 1) throw BadParameters("thagomizer needs n >= 1");
    GraphSpec g;
    g.vertices = n + 2;  // 0 = a, 1 = b, 2.. = v_i
    g.edges.push_back({0, 1});
    for (int i = 0; i < n; ++i) g.edges.push_back({0, i + 2});
    for (int i = 0; i < n; ++i) g.edges.push_back({1, i + 2});
    return graphic(g);
}

Matroid complete_bipartite_2n(int n) {
    if (n < 1) throw BadParameters("complete_bipartite_2n needs n >= 1");
    GraphSpec g;
    g.vertices = n + 2;
    for (int i = 0; i < n; ++i) g.edges.push_back({0, i + 2});
    for (int i = 0; i < n; ++i) g.edges.push_back({1, i + 2});
    return graphic(g);
}

Matroid fan(int n) {
    if (n < 1) throw BadParameters("fan needs n >= 1");
    GraphSpec g;
    g.vertices = n + 1;  // 0 = hub, 1..n = path
    for (int i = 1; i <= n; ++i) g.edges.push_back({0, i});
    for (int i = 1; i < n; ++i) g.edges.push_back({i, i + 1});
    return graphic(g);
}

Matroid wheel(int n) {
    if (n < 3) throw BadParameters("wheel needs n >= 3");
    GraphSpec g;
    g.vertices = n + 1;
    for (int i = 1; i <= n; ++i) g.edges.push_back({0, i});
    for (int i = 1; i <= n; ++i) g.edges.push_back({i, i % n + 1});
    return graphic(g);
}

Matroid whirl(int n) {
    Matroid w = wheel(n);
    Subset rim = ((Subset{1} << n) - 1) << n;
    return relax(w, rim);
}

Matroid projective_geometry(int r, int q) {
    if (r < 1) throw BadParameters("projective_geometry needs r >= 1");
    GF field(q);
    int k = r + 1;
    // normalized representatives: first nonzero coordinate equals 1
    std::vector<std::vector<int>> points;
    std::vector<int> v(k, 0);
    auto rec = [&](auto&& self, int pos, bool leading) -> void {
        if (pos == k) {
            if (!leading) points.push_back(v);
            return;
        }
        if (leading) {
            v[pos] = 0;
            self(self, pos + 1, true);
            v[pos] = 1;
            self(self, pos + 1, false);
            v[pos] = 0;
            return;
        }
        for (int c = 0; c < q; ++c) {
            v[pos] = c;
            self(self, pos + 1, false);
        }
        v[pos] = 0;
    };
    rec(rec, 0, true);
    int n = static_cast<int>(points.size());
    if (n > 64)
        throw GroundSetTooLarge("PG(" + std::to_string(r) + "," +
                                std::to_string(q) + ") has " +
                                std::to_string(n) + " points");
    std::vector<Subset> bases;
    for_each_ksubset(n, k, [&](Subset s) {
        std::vector<std::vector<int>> rows;
        for (int e : elements_of(s)) rows.push_back(points[e]);
        if (gf_rank(field, std::move(rows)) == k) bases.push_back(s);
    });
    return Matroid(n, std::move(bases));
}

}  // namespace matroidkl
