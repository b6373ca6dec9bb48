#include "thoma2/homology.hpp"

#include <algorithm>

#include "bigint.hpp"

namespace thoma2 {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;  // row-major

int rows(const Matrix& m) { return static_cast<int>(m.size()); }
int cols(const Matrix& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

Matrix make_matrix(int r, int c) { return Matrix(r, std::vector<BigInt>(c, BigInt(0))); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix r = make_matrix(rows(a), cols(b));
  for (int i = 0; i < rows(a); ++i)
    for (int k = 0; k < cols(a); ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < cols(b); ++j)
        if (!b[k][j].is_zero()) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

// Smith normal form with transforms: u * a * v = d (u, v unimodular).
struct Snf {
  Matrix d, u, v;
  int rank = 0;
  std::vector<BigInt> diagonal;  // non-zero invariant factors
};

Snf snf(Matrix a) {
  int r = rows(a), c = cols(a);
  Snf out;
  out.u = make_matrix(r, r);
  out.v = make_matrix(c, c);
  for (int i = 0; i < r; ++i) out.u[i][i] = 1;
  for (int j = 0; j < c; ++j) out.v[j][j] = 1;

  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(out.u[i], out.u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (int t = 0; t < r; ++t) std::swap(a[t][i], a[t][j]);
    for (int t = 0; t < c; ++t) std::swap(out.v[t][i], out.v[t][j]);
  };
  auto addmul_row = [&](int dst, int src, const BigInt& k) {  // row dst += k * row src
    for (int t = 0; t < c; ++t) a[dst][t] = a[dst][t] + k * a[src][t];
    for (int t = 0; t < r; ++t) out.u[dst][t] = out.u[dst][t] + k * out.u[src][t];
  };
  auto addmul_col = [&](int dst, int src, const BigInt& k) {
    for (int t = 0; t < r; ++t) a[t][dst] = a[t][dst] + k * a[t][src];
    for (int t = 0; t < c; ++t) out.v[t][dst] = out.v[t][dst] + k * out.v[t][src];
  };
  auto negate_row = [&](int i) {
    for (int t = 0; t < c; ++t) a[i][t] = -a[i][t];
    for (int t = 0; t < r; ++t) out.u[i][t] = -out.u[i][t];
  };

  auto reduce_all = [&]() {
    int p = 0;
    while (p < r && p < c) {
      // non-zero pivot of least magnitude
      int pi = -1, pj = -1;
      for (int i = p; i < r; ++i)
        for (int j = p; j < c; ++j)
          if (!a[i][j].is_zero() && (pi < 0 || a[i][j].abs() < a[pi][pj].abs())) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      swap_rows(p, pi);
      swap_cols(p, pj);
      bool reduced = false;
      while (!reduced) {
        reduced = true;
        for (int i = p + 1; i < r; ++i) {
          if (a[i][p].is_zero()) continue;
          BigInt q = a[i][p] / a[p][p];
          addmul_row(i, p, -q);
          if (!a[i][p].is_zero()) {
            swap_rows(p, i);
            reduced = false;
          }
        }
        for (int j = p + 1; j < c; ++j) {
          if (a[p][j].is_zero()) continue;
          BigInt q = a[p][j] / a[p][p];
          addmul_col(j, p, -q);
          if (!a[p][j].is_zero()) {
            swap_cols(p, j);
            reduced = false;
          }
        }
      }
      if (a[p][p].sign() < 0) negate_row(p);
      ++p;
    }
    return p;
  };

  int p = reduce_all();
  // divisibility of successive invariant factors: fold the offending entry
  // into an earlier column and re-reduce until stable
  while (true) {
    int vi = -1, vj = -1;
    for (int i = 0; i < p && vi < 0; ++i)
      for (int j = i + 1; j < p && vi < 0; ++j)
        if (!(a[j][j] % a[i][i]).is_zero()) {
          vi = i;
          vj = j;
        }
    if (vi < 0) break;
    addmul_col(vi, vj, BigInt(1));
    p = reduce_all();
  }
  out.rank = p;
  out.d = a;
  for (int i = 0; i < p; ++i) out.diagonal.push_back(a[i][i]);
  return out;
}

// solve m * x = b over the integers using the SNF transforms; returns false
// if no integral solution exists
bool solve(const Snf& s, const std::vector<BigInt>& b, std::vector<BigInt>& x) {
  int r = rows(s.d), c = cols(s.d);
  std::vector<BigInt> ub(r, BigInt(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!s.u[i][j].is_zero()) ub[i] = ub[i] + s.u[i][j] * b[j];
  std::vector<BigInt> y(c, BigInt(0));
  for (int i = 0; i < r; ++i) {
    if (i < s.rank) {
      BigInt q, rem;
      BigInt::divmod(ub[i], s.d[i][i], q, rem);
      if (!rem.is_zero()) return false;
      y[i] = q;
    } else if (!ub[i].is_zero()) {
      return false;
    }
  }
  x.assign(c, BigInt(0));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      if (!s.v[i][j].is_zero()) x[i] = x[i] + s.v[i][j] * y[j];
  return true;
}

// kernel basis (columns) of m
Matrix kernel_basis(const Snf& s) {
  int c = cols(s.d);
  Matrix out = make_matrix(c, c - s.rank);
  for (int j = s.rank; j < c; ++j)
    for (int i = 0; i < c; ++i) out[i][j - s.rank] = s.v[i][j];
  return out;
}

// boundary matrix C_n -> C_{n-1} of the normalized complex
Matrix boundary_matrix(const SimplicialSet& k, int n) {
  Matrix d = make_matrix(k.count(n - 1), k.count(n));
  for (int idx = 0; idx < k.count(n); ++idx)
    for (int i = 0; i <= n; ++i) {
      const EZ& f = k.stored_face(n, idx, i);
      if (f.degenerate()) continue;
      BigInt sign(i % 2 == 0 ? 1 : -1);
      d[f.base_idx][idx] = d[f.base_idx][idx] + sign;
    }
  return d;
}

struct DegreeData {
  Matrix z;      // kernel basis of d_n (c_n x z_n)
  Snf z_snf;     // of z, for solving membership
  Matrix m;      // relations: d_{n+1} in z-coordinates (z_n x c_{n+1})
  Snf m_snf;
  long long betti = 0;
  std::vector<std::string> torsion;
};

DegreeData degree_data(const SimplicialSet& k, int n, int cap) {
  DegreeData out;
  int cn = k.count(n);
  if (n == 0) {
    // every 0-chain is a cycle
    out.z = make_matrix(cn, cn);
    for (int i = 0; i < cn; ++i) out.z[i][i] = 1;
  } else {
    Snf sn = snf(boundary_matrix(k, n));
    out.z = kernel_basis(sn);
  }
  out.z_snf = snf(out.z);
  int zn = cols(out.z);
  Matrix dn1 = (n + 1 <= cap) ? boundary_matrix(k, n + 1) : make_matrix(cn, 0);
  out.m = make_matrix(zn, cols(dn1));
  for (int j = 0; j < cols(dn1); ++j) {
    std::vector<BigInt> col(cn);
    for (int i = 0; i < cn; ++i) col[i] = dn1[i][j];
    std::vector<BigInt> x;
    if (!solve(out.z_snf, col, x))
      throw InvalidArgument("boundary image does not lie in the cycle lattice");
    for (int i = 0; i < zn; ++i) out.m[i][j] = x[i];
  }
  out.m_snf = snf(out.m);
  out.betti = zn - out.m_snf.rank;
  for (const BigInt& d : out.m_snf.diagonal)
    if (!(d == BigInt(1))) out.torsion.push_back(d.str());
  return out;
}

}  // namespace

std::vector<HomologyGroup> homology(const SimplicialSet& k, int cap) {
  cap = std::min(cap, k.dim_cap());
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= cap; ++n) {
    DegreeData d = degree_data(k, n, k.dim_cap());
    out.push_back({d.betti, d.torsion});
  }
  return out;
}

bool boundary_squares_to_zero(const SimplicialSet& k, int cap) {
  cap = std::min(cap, k.dim_cap());
  for (int n = 2; n <= cap; ++n) {
    Matrix a = boundary_matrix(k, n - 1);
    Matrix b = boundary_matrix(k, n);
    Matrix ab = matmul(a, b);
    for (int i = 0; i < rows(ab); ++i)
      for (int j = 0; j < cols(ab); ++j)
        if (!ab[i][j].is_zero()) return false;
  }
  return true;
}

long long euler_characteristic(const SimplicialSet& k, int cap) {
  long long chi = 0;
  for (int n = 0; n <= std::min(cap, k.dim_cap()); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(k.count(n));
  return chi;
}

Report homology_iso_probe(const SimplicialMap& f, int cap) {
  Report rep;
  rep.lemma = "homology-probe";
  rep.params = {{"cap", cap}, {"note", "NECESSARY-CONDITION ONLY"}};
  const SimplicialSet& K = f.source();
  const SimplicialSet& L = f.target();
  cap = std::min({cap, K.dim_cap(), L.dim_cap()});
  for (int n = 0; n <= cap; ++n) {
    DegreeData dk = degree_data(K, n, K.dim_cap());
    DegreeData dl = degree_data(L, n, L.dim_cap());

    // chain map in degree n on the normalized complexes
    Matrix t = make_matrix(L.count(n), K.count(n));
    for (int idx = 0; idx < K.count(n); ++idx) {
      EZ v = f.on_nondeg(n, idx);
      if (v.degenerate()) continue;
      t[v.base_idx][idx] = 1;
    }
    // on cycles: solve z_L * s = t * z_K
    Matrix tz = matmul(t, dk.z);
    int zk = cols(dk.z), zl = cols(dl.z);
    Matrix s = make_matrix(zl, zk);
    bool cycles_ok = true;
    for (int j = 0; j < zk && cycles_ok; ++j) {
      std::vector<BigInt> col(L.count(n));
      for (int i = 0; i < L.count(n); ++i) col[i] = tz[i][j];
      std::vector<BigInt> x;
      if (!solve(dl.z_snf, col, x)) cycles_ok = false;
      else
        for (int i = 0; i < zl; ++i) s[i][j] = x[i];
    }
    if (!cycles_ok) {
      rep.fail("degree-" + std::to_string(n), "image of a cycle is not a cycle");
      continue;
    }

    bool betti_eq = dk.betti == dl.betti;
    bool torsion_eq = dk.torsion == dl.torsion;

    // surjectivity of H_n(f): coker[s | m_L] must vanish
    Matrix aug = make_matrix(zl, zk + cols(dl.m));
    for (int i = 0; i < zl; ++i) {
      for (int j = 0; j < zk; ++j) aug[i][j] = s[i][j];
      for (int j = 0; j < cols(dl.m); ++j) aug[i][zk + j] = dl.m[i][j];
    }
    Snf saug = snf(aug);
    bool surjective = saug.rank == zl;
    for (const BigInt& d : saug.diagonal)
      if (!(d == BigInt(1))) surjective = false;

    // injectivity: kernel of (s mod im m_L) must lie in im m_K
    bool injective = true;
    {
      Matrix stack = make_matrix(zl, zk + cols(dl.m));
      for (int i = 0; i < zl; ++i) {
        for (int j = 0; j < zk; ++j) stack[i][j] = s[i][j];
        for (int j = 0; j < cols(dl.m); ++j) stack[i][zk + j] = dl.m[i][j];
      }
      Snf sstack = snf(stack);
      Matrix ker = kernel_basis(sstack);
      Snf mk_snf = dk.m_snf;
      for (int j = 0; j < cols(ker) && injective; ++j) {
        std::vector<BigInt> x(zk);
        for (int i = 0; i < zk; ++i) x[i] = ker[i][j];
        bool zero = true;
        for (const BigInt& e : x)
          if (!e.is_zero()) zero = false;
        if (zero) continue;
        std::vector<BigInt> y;
        if (!solve(mk_snf, x, y)) injective = false;
      }
    }

    if (betti_eq && torsion_eq && surjective && injective)
      rep.pass("degree-" + std::to_string(n),
               "betti " + std::to_string(dk.betti) + ", induced map is an isomorphism");
    else
      rep.fail("degree-" + std::to_string(n), "induced map is not an isomorphism",
               {{"betti_src", dk.betti},
                {"betti_tgt", dl.betti},
                {"surjective", surjective},
                {"injective", injective}});
  }
  return rep;
}

}  // namespace thoma2
