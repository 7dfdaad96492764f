#include "gabikit/module.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gabikit {

namespace {

std::vector<Scalar> basis_vec(const FieldSpec& field, std::size_t n, std::size_t i) {
  std::vector<Scalar> e(n, Scalar::zero(field));
  e[i] = Scalar::one(field);
  return e;
}

std::string pair_witness(const FinAlgebra& a, std::size_t i, std::size_t j) {
  return "(" + a.name(i) + ", " + a.name(j) + ")";
}

void require_same_algebra(const FinAlgebra& a, const FinAlgebra& b, const std::string& what) {
  if (!same_table(a, b)) throw input_error(what + ": the inputs live over different algebras");
}

std::string first_finding(const Report& r) {
  const Finding& f = r.findings().front();
  return f.axiom + " at " + f.witness;
}

void require_gabi(const GabiStructure& g, const std::string& what) {
  Report base = check_gabi(g);
  if (!base.passed()) {
    throw input_error(what + " requires a structure passing the axiom check; first failure: " +
                      first_finding(base));
  }
}

void require_valid_module(const AModule& m, const std::string& label) {
  Report r = check_module(m);
  if (!r.passed()) {
    throw input_error("module " + label + " fails the module axioms; first failure: " +
                      first_finding(r));
  }
}

/// First algebra basis element whose action f fails to intertwine, if any.
std::optional<std::string> module_map_witness(const Matrix& f, const AModule& source,
                                              const AModule& target) {
  for (std::size_t t = 0; t < source.algebra.dim; ++t) {
    if (f * source.action[t] != target.action[t] * f) return source.algebra.name(t);
  }
  return std::nullopt;
}

/// red . (L (x) I_dm) without materializing the Kronecker factor: column
/// (j*dm + l) of the product is sum_i L(i, j) times red's column (i*dm + l).
Matrix contract_kron_right_eye(const Matrix& red, const Matrix& L, std::size_t dm) {
  Matrix out(red.field(), red.rows(), L.cols() * dm);
  for (std::size_t i = 0; i < L.rows(); ++i) {
    for (std::size_t j = 0; j < L.cols(); ++j) {
      const Scalar& c = L(i, j);
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < red.rows(); ++r) {
        for (std::size_t l = 0; l < dm; ++l) {
          const Scalar& v = red(r, i * dm + l);
          if (!v.is_zero()) out(r, j * dm + l) += v * c;
        }
      }
    }
  }
  return out;
}

/// red . (I_blocks (x) C) without materializing the Kronecker factor: column
/// (b*cols(C) + j) of the product is sum_i C(i, j) times red's column
/// (b*rows(C) + i).
Matrix contract_kron_left_eye(const Matrix& red, std::size_t blocks, const Matrix& C) {
  Matrix out(red.field(), red.rows(), blocks * C.cols());
  for (std::size_t i = 0; i < C.rows(); ++i) {
    for (std::size_t j = 0; j < C.cols(); ++j) {
      const Scalar& c = C(i, j);
      if (c.is_zero()) continue;
      for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t r = 0; r < red.rows(); ++r) {
          const Scalar& v = red(r, b * C.rows() + i);
          if (!v.is_zero()) out(r, b * C.cols() + j) += v * c;
        }
      }
    }
  }
  return out;
}

struct LabeledModule {
  std::string label;
  AModule mod;
};

/// The effective test set: trivial and regular modules first, then the
/// user-supplied ones (validated), in a fixed order for deterministic
/// reports.
std::vector<LabeledModule> labeled_test_set(const GabiStructure& g,
                                            const std::vector<AModule>& user) {
  std::vector<LabeledModule> out;
  out.push_back({"trivial", trivial_module(g)});
  out.push_back({"regular", regular_module(g.algebra)});
  for (std::size_t i = 0; i < user.size(); ++i) {
    const std::string label = "user" + std::to_string(i + 1);
    user[i].validate_shape();
    require_same_algebra(g.algebra, user[i].algebra, "test module " + label);
    require_valid_module(user[i], label);
    out.push_back({label, user[i]});
  }
  return out;
}

/// The counit on raw representatives of (A (x) m) (x) Hom(m, N):
/// (e_b (.) x_i) (x) E_{r,c} -> delta_{c,i} rho_N(e_b) n_r.
Matrix ev_ambient(const AModule& m, const AModule& nmod) {
  const FinAlgebra& a = m.algebra;
  const std::size_t na = a.dim, md = m.dim, nd = nmod.dim;
  const std::size_t homd = md * nd;
  Matrix out(a.field, nd, na * md * homd);
  for (std::size_t b = 0; b < na; ++b) {
    for (std::size_t i = 0; i < md; ++i) {
      for (std::size_t r = 0; r < nd; ++r) {
        const std::size_t col = (b * md + i) * homd + (r * md + i);
        for (std::size_t s = 0; s < nd; ++s) {
          const Scalar& c = nmod.action[b](s, r);
          if (!c.is_zero()) out(s, col) = c;
        }
      }
    }
  }
  return out;
}

/// The unit N -> Hom(m, fn): n_j -> (x_i -> class of (1_A (x) x_i) (x) n_j),
/// where fn presents (A (.) m) (x)_A N.
Matrix coev_matrix(const GabiStructure& g, const AModule& m, const AModule& nmod,
                   const TensorOverA& fn) {
  const FinAlgebra& a = g.algebra;
  const std::size_t na = a.dim, md = m.dim, nd = nmod.dim;
  const std::size_t fnd = fn.dim();
  Matrix out(a.field, md * fnd, nd);
  for (std::size_t j = 0; j < nd; ++j) {
    for (std::size_t i = 0; i < md; ++i) {
      std::vector<Scalar> amb(na * md * nd, Scalar::zero(a.field));
      for (std::size_t b = 0; b < na; ++b) {
        if (a.unit[b].is_zero()) continue;
        amb[(b * md + i) * nd + j] = a.unit[b];
      }
      const std::vector<Scalar> red = fn.quotient.reduce.apply(amb);
      for (std::size_t r = 0; r < fnd; ++r) out(r * md + i, j) = red[r];
    }
  }
  return out;
}

AdjunctionComponent materialize_adjunction_impl(const GabiStructure& g, const AModule& m,
                                                const AModule& nmod) {
  const ABimodule am = odot(g, m);
  TensorOverA fn = tensor_over_A(am, nmod);
  AModule gn = hom_module(g, m, nmod);
  TensorOverA fgn = tensor_over_A(am, gn);
  Matrix ev_amb = ev_ambient(m, nmod);
  if (!(ev_amb * fgn.quotient.relations.transpose()).is_zero()) {
    throw input_error("adjunction counit is not well-defined on the relation span");
  }
  Matrix ev = ev_amb * fgn.quotient.section;
  Matrix coev = coev_matrix(g, m, nmod, fn);
  return {std::move(fn), std::move(gn), std::move(fgn), std::move(ev), std::move(coev)};
}

struct LambdaComponent {
  TensorOverA k_box_n;
  Matrix lambda;
};

/// lambda_N: k boxtimes N -> N, (a (.) n) (x)_A 1 -> a.n, verified
/// well-defined and A-linear.
LambdaComponent build_lambda(const GabiStructure& g, const AModule& kmod, const AModule& nmod) {
  const FinAlgebra& a = g.algebra;
  const std::size_t na = a.dim, nd = nmod.dim;
  TensorOverA kn = boxtimes(g, kmod, nmod);
  Matrix lam_amb(a.field, nd, na * nd);
  for (std::size_t b = 0; b < na; ++b) {
    for (std::size_t j = 0; j < nd; ++j) {
      for (std::size_t s = 0; s < nd; ++s) {
        const Scalar& c = nmod.action[b](s, j);
        if (!c.is_zero()) lam_amb(s, b * nd + j) = c;
      }
    }
  }
  if (!(lam_amb * kn.quotient.relations.transpose()).is_zero()) {
    throw input_error("left unitor is not well-defined on the relation span");
  }
  Matrix lambda = lam_amb * kn.quotient.section;
  if (auto w = module_map_witness(lambda, kn.as_module(), nmod)) {
    throw input_error("left unitor is not A-linear at " + *w);
  }
  return {std::move(kn), std::move(lambda)};
}

struct RhoComponent {
  TensorOverA m_box_k;
  Matrix rho;
};

/// rho_M: M -> M boxtimes k, m -> (1_A (.) 1_k) (x)_A m, verified A-linear
/// and invertible.
RhoComponent build_rho(const GabiStructure& g, const AModule& kmod, const AModule& mmod) {
  const FinAlgebra& a = g.algebra;
  const std::size_t na = a.dim, md = mmod.dim;
  TensorOverA mk = boxtimes(g, mmod, kmod);
  Matrix rho(a.field, mk.dim(), md);
  for (std::size_t j = 0; j < md; ++j) {
    std::vector<Scalar> amb(na * md, Scalar::zero(a.field));
    for (std::size_t b = 0; b < na; ++b) {
      if (!a.unit[b].is_zero()) amb[b * md + j] = a.unit[b];
    }
    const std::vector<Scalar> red = mk.quotient.reduce.apply(amb);
    for (std::size_t r = 0; r < mk.dim(); ++r) rho(r, j) = red[r];
  }
  if (auto w = module_map_witness(rho, mmod, mk.as_module())) {
    throw input_error("right unitor is not A-linear at " + *w);
  }
  if (rho.rows() != rho.cols() || !is_invertible(rho)) {
    throw input_error("right unitor is not invertible");
  }
  return {std::move(mk), std::move(rho)};
}

struct AlphaComponent {
  TensorOverA l_box_m;   ///< T1 = L boxtimes M
  TensorOverA lm_box_n;  ///< T2 = (L boxtimes M) boxtimes N
  TensorOverA m_box_n;   ///< MN = M boxtimes N
  TensorOverA l_box_mn;  ///< T3 = L boxtimes (M boxtimes N)
  Matrix alpha;          ///< T2 -> T3
};

/// The associator on raw representatives,
///   (a (.) n) (x)_A ((b (.) m) (x)_A l)
///     -> (a b_+ (.) ((1_A (.) b_- n) (x)_A m)) (x)_A l,
/// verified constant on inner (T1) relation classes, vanishing on outer (T2)
/// relations, and A-linear.
AlphaComponent build_alpha(const GabiStructure& g, const AModule& l, const AModule& m,
                           const AModule& n) {
  const FinAlgebra& a = g.algebra;
  const FieldSpec& field = a.field;
  const std::size_t na = a.dim, ml = l.dim, mm = m.dim, mn = n.dim;

  TensorOverA t1 = boxtimes(g, l, m);
  TensorOverA t2 = tensor_over_A(odot(g, n), t1.as_module());
  TensorOverA mnt = boxtimes(g, m, n);
  TensorOverA t3 = tensor_over_A(odot(g, mnt.as_module()), l);

  const std::size_t t1amb = na * mm * ml;
  const std::size_t t1d = t1.dim();
  const std::size_t mnd = mnt.dim();
  const std::size_t t3d = t3.dim();
  const std::size_t an = na * mn;

  // Inner factor (1_A (.) e_v n_j) (x)_A m_i in M-boxtimes-N coordinates,
  // memoized over (v, j, i).
  std::vector<std::vector<Scalar>> inner(na * mn * mm);
  std::vector<char> have(na * mn * mm, 0);
  auto inner_coords = [&](std::size_t v, std::size_t j, std::size_t i) -> const std::vector<Scalar>& {
    const std::size_t key = (v * mn + j) * mm + i;
    if (!have[key]) {
      std::vector<Scalar> amb(na * mn * mm, Scalar::zero(field));
      for (std::size_t c = 0; c < na; ++c) {
        if (a.unit[c].is_zero()) continue;
        for (std::size_t r = 0; r < mn; ++r) {
          const Scalar& act = n.action[v](r, j);
          if (!act.is_zero()) amb[(c * mn + r) * mm + i] += a.unit[c] * act;
        }
      }
      inner[key] = mnt.quotient.reduce.apply(amb);
      have[key] = 1;
    }
    return inner[key];
  };

  // psi evaluates the formula on the raw basis (e_a (.) n_j) (x) e_s of
  // (A (x) N) (x) T1-ambient, landing in T3 quotient coordinates.
  Matrix psi(field, t3d, an * t1amb);
  for (std::size_t aa = 0; aa < na; ++aa) {
    for (std::size_t j = 0; j < mn; ++j) {
      const std::size_t w = aa * mn + j;
      for (std::size_t b = 0; b < na; ++b) {
        for (std::size_t u = 0; u < na; ++u) {
          for (std::size_t v = 0; v < na; ++v) {
            const Scalar& leg = g.delta(u * na + v, b);
            if (leg.is_zero()) continue;
            for (std::size_t c2 = 0; c2 < na; ++c2) {
              const Scalar& prod = a.mul[aa][u][c2];
              if (prod.is_zero()) continue;
              const Scalar coef = leg * prod;
              for (std::size_t i = 0; i < mm; ++i) {
                const std::vector<Scalar>& y = inner_coords(v, j, i);
                for (std::size_t tt = 0; tt < mnd; ++tt) {
                  if (y[tt].is_zero()) continue;
                  const Scalar weight = coef * y[tt];
                  for (std::size_t s = 0; s < ml; ++s) {
                    const std::size_t col = w * t1amb + (b * mm + i) * ml + s;
                    const std::size_t t3pos = (c2 * mnd + tt) * ml + s;
                    // Reduce into T3 coordinates column by column.
                    for (std::size_t r = 0; r < t3d; ++r) {
                      const Scalar& red = t3.quotient.reduce(r, t3pos);
                      if (!red.is_zero()) psi(r, col) += red * weight;
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  // Inner well-definedness: psi must vanish on e_w (x) (T1 relation span).
  const Matrix& rel1 = t1.quotient.relations;
  for (std::size_t w = 0; w < an; ++w) {
    for (std::size_t rr = 0; rr < rel1.rows(); ++rr) {
      std::vector<Scalar> acc(t3d, Scalar::zero(field));
      for (std::size_t tt = 0; tt < t1amb; ++tt) {
        const Scalar& c = rel1(rr, tt);
        if (c.is_zero()) continue;
        const std::size_t col = w * t1amb + tt;
        for (std::size_t r = 0; r < t3d; ++r) {
          const Scalar& p = psi(r, col);
          if (!p.is_zero()) acc[r] += c * p;
        }
      }
      for (const Scalar& s : acc) {
        if (!s.is_zero()) {
          throw input_error("associator is not constant on inner relation classes");
        }
      }
    }
  }

  // Descend to (A (x) N) (x) T1-quotient via the canonical section.
  const Matrix& sec1 = t1.quotient.section;
  Matrix d(field, t3d, an * t1d);
  for (std::size_t w = 0; w < an; ++w) {
    for (std::size_t q = 0; q < t1d; ++q) {
      for (std::size_t tt = 0; tt < t1amb; ++tt) {
        const Scalar& c = sec1(tt, q);
        if (c.is_zero()) continue;
        const std::size_t col = w * t1amb + tt;
        for (std::size_t r = 0; r < t3d; ++r) {
          const Scalar& p = psi(r, col);
          if (!p.is_zero()) d(r, w * t1d + q) += c * p;
        }
      }
    }
  }

  // Outer well-definedness: the descended map must kill the T2 relations.
  if (!(d * t2.quotient.relations.transpose()).is_zero()) {
    throw input_error("associator is not well-defined on the outer relation span");
  }

  Matrix alpha = d * t2.quotient.section;
  if (auto w = module_map_witness(alpha, t2.as_module(), t3.as_module())) {
    throw input_error("associator is not A-linear at " + *w);
  }
  return {std::move(t1), std::move(t2), std::move(mnt), std::move(t3), std::move(alpha)};
}

}  // namespace

void AModule::validate_shape() const {
  algebra.validate_shape();
  if (action.size() != algebra.dim) {
    throw input_error("module needs one action matrix per algebra basis element");
  }
  for (const Matrix& m : action) {
    if (m.rows() != dim || m.cols() != dim) {
      throw input_error("module action matrices must be dim x dim");
    }
    if (!(m.field() == algebra.field)) throw input_error("module action uses the wrong field");
  }
}

void ABimodule::validate_shape() const {
  algebra.validate_shape();
  if (left_action.size() != algebra.dim || right_action.size() != algebra.dim) {
    throw input_error("bimodule needs one left and one right action matrix per basis element");
  }
  for (const std::vector<Matrix>* family : {&left_action, &right_action}) {
    for (const Matrix& m : *family) {
      if (m.rows() != dim || m.cols() != dim) {
        throw input_error("bimodule action matrices must be dim x dim");
      }
      if (!(m.field() == algebra.field)) throw input_error("bimodule action uses the wrong field");
    }
  }
}

AModule TensorOverA::as_module() const { return AModule{source.algebra, quotient.dim(), induced}; }

AModule trivial_module(const GabiStructure& g) {
  g.validate_shape();
  AModule m{g.algebra, 1, {}};
  m.action.reserve(g.algebra.dim);
  for (std::size_t i = 0; i < g.algebra.dim; ++i) {
    Matrix s(g.algebra.field, 1, 1);
    s(0, 0) = g.eps(0, i);
    m.action.push_back(std::move(s));
  }
  return m;
}

AModule regular_module(const FinAlgebra& a) {
  a.validate_shape();
  AModule m{a, a.dim, {}};
  m.action.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    m.action.push_back(left_mul(a, basis_vec(a.field, a.dim, i)));
  }
  return m;
}

AModule zero_module(const FinAlgebra& a) {
  a.validate_shape();
  return AModule{a, 0, std::vector<Matrix>(a.dim, Matrix(a.field, 0, 0))};
}

Matrix module_action(const AModule& m, const std::vector<Scalar>& x) {
  m.validate_shape();
  if (x.size() != m.algebra.dim) throw input_error("element has the wrong length");
  Matrix out(m.algebra.field, m.dim, m.dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out = out + m.action[i] * x[i];
  }
  return out;
}

Report check_module(const AModule& m) {
  m.validate_shape();
  const FinAlgebra& a = m.algebra;
  Report report;
  if (module_action(m, a.unit) != Matrix::identity(a.field, m.dim)) {
    report.fail("unit", "1", "rho(1) is not the identity matrix");
  }
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix rhs(a.field, m.dim, m.dim);
      for (std::size_t c = 0; c < a.dim; ++c) {
        const Scalar& coef = a.mul[i][j][c];
        if (!coef.is_zero()) rhs = rhs + m.action[c] * coef;
      }
      if (m.action[i] * m.action[j] != rhs) {
        report.fail("multiplicativity", pair_witness(a, i, j),
                    "rho(" + a.name(i) + ") rho(" + a.name(j) +
                        ") differs from the action of the product");
      }
    }
  }
  return report;
}

Report check_bimodule(const ABimodule& b) {
  b.validate_shape();
  const FinAlgebra& a = b.algebra;
  Report report;
  const Matrix eye = Matrix::identity(a.field, b.dim);
  Matrix left_unit(a.field, b.dim, b.dim);
  Matrix right_unit(a.field, b.dim, b.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (a.unit[i].is_zero()) continue;
    left_unit = left_unit + b.left_action[i] * a.unit[i];
    right_unit = right_unit + b.right_action[i] * a.unit[i];
  }
  if (left_unit != eye) report.fail("left-unit", "1", "left action of 1 is not the identity");
  if (right_unit != eye) report.fail("right-unit", "1", "right action of 1 is not the identity");
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix left_rhs(a.field, b.dim, b.dim);
      Matrix right_rhs(a.field, b.dim, b.dim);
      for (std::size_t c = 0; c < a.dim; ++c) {
        const Scalar& forward = a.mul[i][j][c];
        if (!forward.is_zero()) left_rhs = left_rhs + b.left_action[c] * forward;
        const Scalar& reversed = a.mul[j][i][c];
        if (!reversed.is_zero()) right_rhs = right_rhs + b.right_action[c] * reversed;
      }
      if (b.left_action[i] * b.left_action[j] != left_rhs) {
        report.fail("left-multiplicativity", pair_witness(a, i, j),
                    "left action is not multiplicative");
      }
      // m.e_j.e_i = m.(e_j e_i), so R(e_i) R(e_j) must act as e_j e_i.
      if (b.right_action[i] * b.right_action[j] != right_rhs) {
        report.fail("right-multiplicativity", pair_witness(a, i, j),
                    "right action is not anti-multiplicative in composition order");
      }
      if (b.left_action[i] * b.right_action[j] != b.right_action[j] * b.left_action[i]) {
        report.fail("commutation", pair_witness(a, i, j),
                    "left and right actions fail to commute");
      }
    }
  }
  return report;
}

bool is_module_map(const Matrix& f, const AModule& source, const AModule& target) {
  source.validate_shape();
  target.validate_shape();
  require_same_algebra(source.algebra, target.algebra, "is_module_map");
  if (f.rows() != target.dim || f.cols() != source.dim) {
    throw input_error("is_module_map: matrix shape does not match the modules");
  }
  if (!(f.field() == source.algebra.field)) throw input_error("is_module_map: field mismatch");
  return !module_map_witness(f, source, target).has_value();
}

AModule hom_module(const GabiStructure& g, const AModule& m, const AModule& n) {
  g.validate_shape();
  m.validate_shape();
  n.validate_shape();
  require_same_algebra(g.algebra, m.algebra, "hom_module");
  require_same_algebra(g.algebra, n.algebra, "hom_module");
  const std::size_t na = g.algebra.dim;
  AModule h{g.algebra, m.dim * n.dim, {}};
  h.action.reserve(na);
  for (std::size_t t = 0; t < na; ++t) {
    Matrix ht(g.algebra.field, h.dim, h.dim);
    for (std::size_t u = 0; u < na; ++u) {
      for (std::size_t v = 0; v < na; ++v) {
        const Scalar& leg = g.delta(u * na + v, t);
        if (leg.is_zero()) continue;
        ht = ht + kronecker(n.action[u], m.action[v].transpose()) * leg;
      }
    }
    h.action.push_back(std::move(ht));
  }
  return h;
}

Report closed_maps_check(const GabiStructure& g, const AModule& m,
                         const std::vector<AModule>& test_modules) {
  g.validate_shape();
  m.validate_shape();
  require_same_algebra(g.algebra, m.algebra, "closed_maps_check");
  const FieldSpec& field = g.algebra.field;
  Report report;

  AModule k = trivial_module(g);
  {
    AModule hkm = hom_module(g, k, m);
    // Hom(k, m) flattens to m's coordinates, so evaluation at 1 is the
    // identity matrix.
    if (auto w = module_map_witness(Matrix::identity(field, m.dim), hkm, m)) {
      report.fail("i-equivariance", *w, "evaluation at 1 on Hom(k, M) is not A-linear");
    }
  }
  {
    AModule hmm = hom_module(g, m, m);
    Matrix j_map(field, m.dim * m.dim, 1);
    for (std::size_t r = 0; r < m.dim; ++r) j_map(r * m.dim + r, 0) = Scalar::one(field);
    if (auto w = module_map_witness(j_map, k, hmm)) {
      report.fail("j-equivariance", *w, "the unit map 1 -> id_M is not A-linear");
    }
  }
  const std::vector<LabeledModule> set = labeled_test_set(g, test_modules);
  for (const LabeledModule& nn : set) {
    for (const LabeledModule& pp : set) {
      AModule hnp = hom_module(g, nn.mod, pp.mod);
      AModule target = hom_module(g, hom_module(g, m, nn.mod), hom_module(g, m, pp.mod));
      const std::size_t md = m.dim, nd = nn.mod.dim, pd = pp.mod.dim;
      Matrix gamma(field, target.dim, hnp.dim);
      // Gamma(E_{a,b}) = E_{a,b} (x) id maps h -> E_{a,b} . h.
      for (std::size_t aa = 0; aa < pd; ++aa) {
        for (std::size_t bb = 0; bb < nd; ++bb) {
          for (std::size_t r = 0; r < md; ++r) {
            gamma((aa * md + r) * (nd * md) + (bb * md + r), aa * nd + bb) = Scalar::one(field);
          }
        }
      }
      if (auto w = module_map_witness(gamma, hnp, target)) {
        report.fail("Gamma-equivariance", "(N=" + nn.label + ", P=" + pp.label + ") at " + *w,
                    "post-composition is not A-linear");
      }
    }
  }
  return report;
}

ABimodule odot(const GabiStructure& g, const AModule& m) {
  g.validate_shape();
  m.validate_shape();
  require_same_algebra(g.algebra, m.algebra, "odot");
  const FinAlgebra& a = g.algebra;
  const std::size_t na = a.dim, md = m.dim;
  ABimodule b{a, na * md, {}, {}};
  const Matrix eye = Matrix::identity(a.field, md);
  b.left_action.reserve(na);
  b.right_action.reserve(na);
  for (std::size_t t = 0; t < na; ++t) {
    b.left_action.push_back(kronecker(left_mul(a, basis_vec(a.field, na, t)), eye));
  }
  for (std::size_t t = 0; t < na; ++t) {
    Matrix rt(a.field, b.dim, b.dim);
    for (std::size_t u = 0; u < na; ++u) {
      for (std::size_t v = 0; v < na; ++v) {
        const Scalar& leg = g.delta(u * na + v, t);
        if (leg.is_zero()) continue;
        rt = rt + kronecker(right_mul(a, basis_vec(a.field, na, u)), m.action[v]) * leg;
      }
    }
    b.right_action.push_back(std::move(rt));
  }
  return b;
}

TensorOverA tensor_over_A(const ABimodule& p, const AModule& m) {
  p.validate_shape();
  m.validate_shape();
  require_same_algebra(p.algebra, m.algebra, "tensor_over_A");
  const FinAlgebra& a = p.algebra;
  const FieldSpec& field = a.field;
  const std::size_t na = a.dim, dp = p.dim, dm = m.dim;
  const std::size_t ambient = dp * dm;

  RowSpan span(field, ambient);
  for (std::size_t pi = 0; pi < dp; ++pi) {
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < dm; ++j) {
        std::vector<Scalar> row(ambient, Scalar::zero(field));
        bool any = false;
        for (std::size_t rr = 0; rr < dp; ++rr) {
          const Scalar& c = p.right_action[i](rr, pi);
          if (c.is_zero()) continue;
          row[rr * dm + j] += c;
          any = true;
        }
        for (std::size_t ss = 0; ss < dm; ++ss) {
          const Scalar& c = m.action[i](ss, j);
          if (c.is_zero()) continue;
          row[pi * dm + ss] -= c;
          any = true;
        }
        if (any) span.insert(std::move(row));
      }
    }
  }

  QuotientSpace q = quotient_by_rows(ambient, span.basis_rows());
  const Matrix rel_t = q.relations.transpose();
  std::vector<Matrix> induced;
  induced.reserve(na);
  for (std::size_t t = 0; t < na; ++t) {
    const Matrix rb = contract_kron_right_eye(q.reduce, p.left_action[t], dm);
    if (!(rb * rel_t).is_zero()) {
      throw input_error("tensor_over_A: induced action does not annihilate the relation span");
    }
    induced.push_back(rb * q.section);
  }
  return TensorOverA{p, m, std::move(q), std::move(induced)};
}

TensorOverA boxtimes(const GabiStructure& g, const AModule& m, const AModule& n) {
  return tensor_over_A(odot(g, n), m);
}

AdjunctionComponent materialize_adjunction(const GabiStructure& g, const AModule& m,
                                           const AModule& n) {
  g.validate_shape();
  m.validate_shape();
  n.validate_shape();
  require_same_algebra(g.algebra, m.algebra, "materialize_adjunction");
  require_same_algebra(g.algebra, n.algebra, "materialize_adjunction");
  require_gabi(g, "materialize_adjunction");
  require_valid_module(m, "M");
  require_valid_module(n, "N");
  return materialize_adjunction_impl(g, m, n);
}

Report adjunction_check(const GabiStructure& g, const AModule& m,
                        const std::vector<AModule>& test_modules) {
  g.validate_shape();
  m.validate_shape();
  require_same_algebra(g.algebra, m.algebra, "adjunction_check");
  require_gabi(g, "adjunction_check");
  require_valid_module(m, "M");
  const FieldSpec& field = g.algebra.field;
  const std::size_t md = m.dim, na = g.algebra.dim;
  Report report;
  for (const LabeledModule& lm : labeled_test_set(g, test_modules)) {
    const AModule& nmod = lm.mod;
    AdjunctionComponent adj = materialize_adjunction_impl(g, m, nmod);
    const AModule fn_mod = adj.fn.as_module();
    const AModule fgn_mod = adj.fgn.as_module();
    const AModule gfn_mod = hom_module(g, m, fn_mod);
    if (auto w = module_map_witness(adj.ev, fgn_mod, nmod)) {
      report.fail("ev-linearity", "N=" + lm.label + " at " + *w,
                  "the counit fails to intertwine the actions");
    }
    if (auto w = module_map_witness(adj.coev, nmod, gfn_mod)) {
      report.fail("coev-linearity", "N=" + lm.label + " at " + *w,
                  "the unit fails to intertwine the actions");
    }
    // Triangle 1: ev_{FN} . F(coev_N) = id_{FN}.
    TensorOverA fgfn = tensor_over_A(odot(g, m), gfn_mod);
    Matrix ev2_amb = ev_ambient(m, fn_mod);
    if (!(ev2_amb * fgfn.quotient.relations.transpose()).is_zero()) {
      report.fail("triangle-1", "N=" + lm.label,
                  "the counit at FN is not well-defined on the quotient");
    } else {
      const Matrix ev2 = ev2_amb * fgfn.quotient.section;
      const Matrix fcoev = contract_kron_left_eye(fgfn.quotient.reduce, na * md, adj.coev) *
                           adj.fn.quotient.section;
      if (ev2 * fcoev != Matrix::identity(field, adj.fn.dim())) {
        report.fail("triangle-1", "N=" + lm.label, "ev_FN . F(coev_N) != id");
      }
    }
    // Triangle 2: Hom(m, ev_N) . coev_{GN} = id_{GN}.
    const Matrix coev2 = coev_matrix(g, m, adj.gn, adj.fgn);
    if (kronecker(adj.ev, Matrix::identity(field, md)) * coev2 !=
        Matrix::identity(field, adj.gn.dim)) {
      report.fail("triangle-2", "N=" + lm.label, "Hom(M, ev_N) . coev_GN != id");
    }
  }
  return report;
}

BoxtimesConstraints boxtimes_constraints(const GabiStructure& g, const AModule& l,
                                         const AModule& m, const AModule& n) {
  g.validate_shape();
  l.validate_shape();
  m.validate_shape();
  n.validate_shape();
  require_same_algebra(g.algebra, l.algebra, "boxtimes_constraints");
  require_same_algebra(g.algebra, m.algebra, "boxtimes_constraints");
  require_same_algebra(g.algebra, n.algebra, "boxtimes_constraints");
  require_gabi(g, "boxtimes_constraints");
  require_valid_module(l, "L");
  require_valid_module(m, "M");
  require_valid_module(n, "N");

  const AModule k = trivial_module(g);
  LambdaComponent lam = build_lambda(g, k, n);
  RhoComponent rho = build_rho(g, k, m);
  AlphaComponent alpha = build_alpha(g, l, m, n);
  return BoxtimesConstraints{std::move(lam.k_box_n),  std::move(rho.m_box_k),
                             std::move(alpha.l_box_m), std::move(alpha.lm_box_n),
                             std::move(alpha.m_box_n), std::move(alpha.l_box_mn),
                             std::move(lam.lambda),    std::move(rho.rho),
                             std::move(alpha.alpha)};
}

Report normality_check(const GabiStructure& g, const std::vector<AModule>& test_modules) {
  g.validate_shape();
  require_gabi(g, "normality_check");
  const std::vector<LabeledModule> set = labeled_test_set(g, test_modules);
  Report report;
  std::string sampled = "normality sampled on modules:";
  for (const LabeledModule& lm : set) sampled += " " + lm.label;
  report.note(sampled);

  const bool beta_invertible = is_invertible(canonical_beta(g));
  report.note(std::string("beta: ") + (beta_invertible ? "invertible" : "singular"));

  const HopfOutcome hopf = derive_hopf(g, HopfStrategy::BetaInverse);
  const bool hopf_derived = std::holds_alternative<HopfResult>(hopf);
  report.note(hopf_derived
                  ? "derive_hopf(beta-inverse): success"
                  : "derive_hopf(beta-inverse): not applicable (" +
                        std::get<NotApplicable>(hopf).reason + ")");

  const AModule k = trivial_module(g);
  for (const LabeledModule& lm : set) {
    const LambdaComponent lam = build_lambda(g, k, lm.mod);
    const bool invertible =
        lam.lambda.rows() == lam.lambda.cols() && is_invertible(lam.lambda);
    report.note("lambda(" + lm.label + "): " + (invertible ? "invertible" : "singular"));
    if (hopf_derived && !invertible) {
      report.fail("FAULT: left normality", "lambda(" + lm.label + ")",
                  "a Hopf structure was derived from beta but this sampled left-unitor "
                  "component is singular");
    }
  }
  for (const LabeledModule& ll : set) {
    for (const LabeledModule& mm : set) {
      for (const LabeledModule& nn : set) {
        const AlphaComponent ac = build_alpha(g, ll.mod, mm.mod, nn.mod);
        const bool invertible =
            ac.alpha.rows() == ac.alpha.cols() && is_invertible(ac.alpha);
        const std::string label = "alpha(" + ll.label + ", " + mm.label + ", " + nn.label + ")";
        report.note(label + ": " + (invertible ? "invertible" : "singular"));
        if (beta_invertible && !invertible) {
          report.fail("FAULT: associative normality", label,
                      "beta is invertible but this sampled associator component is singular");
        }
      }
    }
  }
  return report;
}

}  // namespace gabikit
