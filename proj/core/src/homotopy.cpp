#include "hmon/homotopy.hpp"

#include <algorithm>

#include "hmon/error.hpp"

namespace hmon {

namespace {

Mat zeros(const BaseRing& r, std::size_t rows, std::size_t cols) { return Mat(r, rows, cols); }
Mat eye(const BaseRing& r, std::size_t n) { return Mat::identity(r, n); }

}  // namespace

std::optional<HomotopyWitness> null_homotopy(const MonMorphism& psi) {
  const MonObject& f = psi.src();
  const MonObject& g = psi.tgt();
  const RingCtx& ctx = f.ctx();
  const Mat rhs = psi.psi0() * f.matrix();
  auto s0 = solve_two_sided_congruence(g.matrix(), f.matrix(), rhs, ctx);
  if (!s0) return std::nullopt;
  Mat s1 = (rhs - g.matrix() * *s0 * f.matrix()).div_exact(ctx.omega());
  return HomotopyWitness{std::move(*s0), std::move(s1)};
}

bool check_witness(const MonMorphism& psi, const HomotopyWitness& w) {
  const MonObject& f = psi.src();
  const MonObject& g = psi.tgt();
  if (w.s0.rows() != g.n() || w.s0.cols() != f.n() || w.s1.rows() != g.n() || w.s1.cols() != f.n()) return false;
  if (!w.s0.is_integral() || !w.s1.is_integral()) return false;
  return psi.psi0() * f.matrix() - g.matrix() * w.s0 * f.matrix() == w.s1.scaled(f.ctx().omega());
}

bool homotopic(const MonMorphism& a, const MonMorphism& b) { return null_homotopy(a - b).has_value(); }

ProjectiveFactorization factor_through_projective(const MonMorphism& psi, const HomotopyWitness& w) {
  if (!check_witness(psi, w)) throw Error(ErrorCode::InvalidWitness, "psi0 f - f' s0 f != omega s1");
  const ProjectiveEnvelope env = projective_env(psi.tgt());
  MonMorphism alpha = MonMorphism::make(psi.src(), env.l, Mat::from_blocks({{w.s1}, {psi.psi1()}}),
                                        Mat::from_blocks({{w.s0}, {psi.psi0()}}));
  return ProjectiveFactorization{std::move(alpha), env.pi};
}

int stable_hom_cell(int s, int s2, int t) {
  return std::max(0, std::min(s2, t - s) - std::max(s2 - s, 0));
}

StableHomModule stable_hom(const MonObject& src, const MonObject& tgt) {
  if (!(src.ctx() == tgt.ctx())) throw Error(ErrorCode::ContextMismatch, "stable Hom across contexts");
  const int t = src.ctx().t();
  StableHomModule m;
  for (int s2 : tgt.svals())
    for (int s : src.svals())
      if (int len = stable_hom_cell(s, s2, t); len > 0) m.lengths.push_back(len);
  std::sort(m.lengths.begin(), m.lengths.end());
  return m;
}

MonObject suspend(const MonObject& f) { return MonObject::validate(-f.sigma().matrix(), f.ctx()); }

MonMorphism suspend(const MonMorphism& psi) {
  return MonMorphism::make(suspend(psi.src()), suspend(psi.tgt()), psi.psi0(), psi.psi1());
}

Cone cone(const MonMorphism& psi) {
  const MonObject& f = psi.src();
  const MonObject& g = psi.tgt();
  const BaseRing& r = f.ctx().base();
  const std::size_t n = f.n(), m = g.n();
  MonObject C = MonObject::validate(
      Mat::from_blocks({{g.matrix(), psi.psi0()}, {zeros(r, n, m), -f.sigma().matrix()}}), f.ctx());
  const Mat in = Mat::from_blocks({{eye(r, m)}, {zeros(r, n, m)}});
  const Mat out = Mat::from_blocks({{zeros(r, n, m), eye(r, n)}});
  MonMorphism inj = MonMorphism::make(g, C, in, in);
  MonMorphism proj = MonMorphism::make(C, suspend(f), out, out);
  return Cone{std::move(C), std::move(inj), std::move(proj)};
}

Triangle standard_triangle(const MonMorphism& psi) {
  Cone c = cone(psi);
  return Triangle{psi, std::move(c.inj), std::move(c.proj)};
}

std::optional<std::vector<HomotopyWitness>> triangle_nullity(const Triangle& tr) {
  std::vector<HomotopyWitness> out;
  for (const MonMorphism& comp : {tr.v.after(tr.u), tr.w.after(tr.v), suspend(tr.u).after(tr.w)}) {
    auto w = null_homotopy(comp);
    if (!w) return std::nullopt;
    out.push_back(std::move(*w));
  }
  return out;
}

namespace {

// Collects matrix equations sum_k A_k X_k B_k = C in unknown matrices X_k
// and flattens them (column-major vec) into one system over S.
class BlockSystem {
 public:
  explicit BlockSystem(const BaseRing& r) : ring_(r) {}

  std::size_t unknown(std::size_t rows, std::size_t cols) {
    unknowns_.push_back({rows, cols, n_unknowns_});
    n_unknowns_ += rows * cols;
    return unknowns_.size() - 1;
  }
  std::size_t equation(const Mat& rhs) {
    equations_.push_back({rhs.rows(), rhs.cols(), n_equations_});
    rhs_.push_back(rhs);
    n_equations_ += rhs.rows() * rhs.cols();
    return equations_.size() - 1;
  }
  void term(std::size_t eq, const Mat& A, std::size_t x, const Mat& B) { terms_.push_back({eq, A, x, B}); }

  std::optional<std::vector<Mat>> solve() const {
    Mat M(ring_, n_equations_, n_unknowns_), rhs(ring_, n_equations_, 1);
    for (std::size_t e = 0; e < equations_.size(); ++e)
      for (std::size_t j = 0; j < equations_[e].cols; ++j)
        for (std::size_t i = 0; i < equations_[e].rows; ++i)
          rhs(equations_[e].offset + j * equations_[e].rows + i, 0) = rhs_[e](i, j);
    for (const Term& t : terms_) {
      const Shape& eq = equations_[t.eq];
      const Shape& x = unknowns_[t.x];
      for (std::size_t i = 0; i < eq.rows; ++i)
        for (std::size_t k = 0; k < x.rows; ++k) {
          if (t.A(i, k).is_zero()) continue;
          for (std::size_t l = 0; l < x.cols; ++l)
            for (std::size_t j = 0; j < eq.cols; ++j)
              if (!t.B(l, j).is_zero()) M(eq.offset + j * eq.rows + i, x.offset + l * x.rows + k) += t.A(i, k) * t.B(l, j);
        }
    }
    auto sol = solve_exact(M, rhs);
    if (!sol) return std::nullopt;
    std::vector<Mat> out;
    for (const Shape& x : unknowns_) {
      Mat X(ring_, x.rows, x.cols);
      for (std::size_t l = 0; l < x.cols; ++l)
        for (std::size_t k = 0; k < x.rows; ++k) X(k, l) = sol->particular(x.offset + l * x.rows + k, 0);
      out.push_back(std::move(X));
    }
    return out;
  }

 private:
  struct Shape {
    std::size_t rows, cols, offset;
  };
  struct Term {
    std::size_t eq;
    Mat A;
    std::size_t x;
    Mat B;
  };
  BaseRing ring_;
  std::vector<Shape> unknowns_, equations_;
  std::vector<Mat> rhs_;
  std::vector<Term> terms_;
  std::size_t n_unknowns_ = 0, n_equations_ = 0;
};

}  // namespace

Rotation rotate(const Triangle& tr) {
  if (!triangle_nullity(tr)) throw Error(ErrorCode::NotExactTriangle, "a consecutive composite is not null-homotopic");
  const MonMorphism m = -suspend(tr.u);
  Triangle rotated{tr.v, tr.w, m};
  // Comparison C(v) -> W = Sigma A of the form ([w1, s0], [w0, s1]). It is a
  // morphism iff (s0, s1) witnesses w o v; we also ask m o phi ~ proj_v,
  // which makes (id, id, phi) a map of triangles.
  const MonObject& Y = tr.v.src();
  const MonObject& W = tr.w.tgt();
  const Cone cv = cone(tr.v);
  const BaseRing& r = Y.ctx().base();
  const std::size_t ny = Y.n(), nz = tr.v.tgt().n(), nw = W.n(), nc = cv.C.n();
  const Mat E = Mat::from_blocks({{zeros(r, ny, nz), eye(r, ny)}});
  const Mat E2 = Mat::from_blocks({{eye(r, nz), zeros(r, nz, ny)}});
  // Cheap attempt first: any witness of w o v, accepted if the third square
  // already commutes up to homotopy.
  if (auto wv = null_homotopy(tr.w.after(tr.v))) {
    MonMorphism phi = MonMorphism::make(cv.C, W, Mat::from_blocks({{tr.w.psi1(), wv->s0}}),
                                        Mat::from_blocks({{tr.w.psi0(), wv->s1}}));
    if (homotopic(m.after(phi), cv.proj)) return Rotation{std::move(rotated), std::move(phi)};
  }
  BlockSystem sys(r);
  const std::size_t s0 = sys.unknown(nw, ny), s1 = sys.unknown(nw, ny);
  const std::size_t r0 = sys.unknown(ny, nc), r1 = sys.unknown(ny, nc);
  // W s0 + s1 y_Sigma = w0 v0
  const std::size_t e1 = sys.equation(tr.w.psi0() * tr.v.psi0());
  sys.term(e1, W.matrix(), s0, eye(r, ny));
  sys.term(e1, eye(r, nw), s1, Y.sigma().matrix());
  // m0 s1 E + y_Sigma r0 - r1 C_Sigma = E - m0 w0 E2
  const std::size_t e2 = sys.equation(E - m.psi0() * tr.w.psi0() * E2);
  sys.term(e2, m.psi0(), s1, E);
  sys.term(e2, Y.sigma().matrix(), r0, eye(r, nc));
  sys.term(e2, -eye(r, ny), r1, cv.C.sigma().matrix());
  auto sol = sys.solve();
  if (!sol) throw Error(ErrorCode::NotExactTriangle, "no comparison map from the cone of v");
  MonMorphism iso = MonMorphism::make(cv.C, W, Mat::from_blocks({{tr.w.psi1(), (*sol)[s0]}}),
                                      Mat::from_blocks({{tr.w.psi0(), (*sol)[s1]}}));
  return Rotation{std::move(rotated), std::move(iso)};
}

Tr3Completion complete_morphism_tr3(const MonMorphism& gamma, const MonMorphism& eps, const MonMorphism& psi,
                                    const MonMorphism& eps_prime) {
  if (!(gamma.src() == psi.src()) || !(eps.src() == psi.tgt()) || !(gamma.tgt() == eps_prime.src()) ||
      !(eps.tgt() == eps_prime.tgt()))
    throw Error(ErrorCode::NotComposable, "the four maps do not form a square");
  const MonMorphism diff = eps.after(psi) - eps_prime.after(gamma);
  auto w = null_homotopy(diff);
  if (!w) throw Error(ErrorCode::SquaresNotHomotopyCommuting, "eps o psi - eps' o gamma is not null-homotopic");
  const Cone top = cone(psi);
  const Cone bottom = cone(eps_prime);
  const BaseRing& r = psi.src().ctx().base();
  const std::size_t n2 = eps_prime.src().n();
  Mat eta1 = Mat::from_blocks({{eps.psi1(), w->s0}, {zeros(r, n2, eps.psi1().cols()), gamma.psi0()}});
  Mat eta0 = Mat::from_blocks({{eps.psi0(), w->s1}, {zeros(r, n2, eps.psi0().cols()), gamma.psi1()}});
  Tr3Completion out{MonMorphism::make(top.C, bottom.C, std::move(eta1), std::move(eta0)), std::move(*w)};
  const MonMorphism l1 = out.eta.after(top.inj), l2 = bottom.inj.after(eps);
  const MonMorphism r1 = bottom.proj.after(out.eta), r2 = suspend(gamma).after(top.proj);
  out.left_strict = l1.psi1() == l2.psi1() && l1.psi0() == l2.psi0();
  out.right_strict = r1.psi1() == r2.psi1() && r1.psi0() == r2.psi0();
  out.left_homotopy = out.left_strict || homotopic(l1, l2);
  out.right_homotopy = out.right_strict || homotopic(r1, r2);
  return out;
}

bool is_iso_in_homotopy(const MonMorphism& psi) { return is_projective(cone(psi).C); }

namespace {

bool same(const MonMorphism& a, const MonMorphism& b) {
  return a.src() == b.src() && a.tgt() == b.tgt() && a.psi1() == b.psi1() && a.psi0() == b.psi0();
}

}  // namespace

Octahedron octahedron(const MonMorphism& psi, const MonMorphism& eta) {
  if (!(psi.tgt() == eta.src())) throw Error(ErrorCode::NotComposable, "target of psi is not the source of eta");
  const BaseRing& r = psi.src().ctx().base();
  const std::size_t n = psi.src().n(), n1 = psi.tgt().n(), n2 = eta.tgt().n();
  const MonMorphism comp = eta.after(psi);
  Triangle t_psi = standard_triangle(psi), t_comp = standard_triangle(comp), t_eta = standard_triangle(eta);
  const MonObject& c_psi = t_psi.v.tgt();
  const MonObject& c_comp = t_comp.v.tgt();
  const MonObject& c_eta = t_eta.v.tgt();

  MonMorphism phi = MonMorphism::make(
      c_psi, c_comp, Mat::from_blocks({{eta.psi1(), zeros(r, n2, n)}, {zeros(r, n, n1), eye(r, n)}}),
      Mat::from_blocks({{eta.psi0(), zeros(r, n2, n)}, {zeros(r, n, n1), eye(r, n)}}));
  MonMorphism gamma = MonMorphism::make(
      c_comp, c_eta, Mat::from_blocks({{eye(r, n2), zeros(r, n2, n)}, {zeros(r, n1, n2), psi.psi0()}}),
      Mat::from_blocks({{eye(r, n2), zeros(r, n2, n)}, {zeros(r, n1, n2), psi.psi1()}}));
  const Mat d = Mat::from_blocks({{zeros(r, n1, n2), eye(r, n1)}, {zeros(r, n, n2), zeros(r, n, n1)}});
  MonMorphism delta = MonMorphism::make(c_eta, suspend(c_psi), d, d);

  Triangle bottom = standard_triangle(phi);
  const MonObject& c_phi = bottom.v.tgt();
  // blocks of C(phi): (f'', f, Sigma-side f', Sigma-side f)
  const Mat e = Mat::from_blocks({{eye(r, n2), zeros(r, n2, n1)},
                                  {zeros(r, n, n2), zeros(r, n, n1)},
                                  {zeros(r, n1, n2), eye(r, n1)},
                                  {zeros(r, n, n2), zeros(r, n, n1)}});
  MonMorphism epsilon = MonMorphism::make(c_eta, c_phi, e, e);
  // -E(4,2): the f-summand of C(eta psi) onto the last summand of C(phi)
  Mat s = zeros(r, n2 + n + n1 + n, n2 + n);
  for (std::size_t i = 0; i < n; ++i) s(n2 + n + n1 + i, n2 + i) = -Scalar::one(r);
  HomotopyWitness wit{s, s};

  Octahedron o{std::move(t_psi), std::move(t_comp), std::move(t_eta), std::move(phi), std::move(gamma),
               std::move(delta), std::move(bottom), std::move(epsilon), std::move(wit)};
  o.squares_commute = same(o.phi.after(o.tri_psi.v), o.tri_comp.v.after(eta)) &&
                      same(o.tri_comp.w.after(o.phi), o.tri_psi.w) &&
                      same(o.gamma.after(o.tri_comp.v), o.tri_eta.v) &&
                      same(o.tri_eta.w.after(o.gamma), suspend(psi).after(o.tri_comp.w)) &&
                      same(o.delta, suspend(o.tri_psi.v).after(o.tri_eta.w));
  o.delta_strict = same(o.bottom.w.after(o.epsilon), o.delta);
  o.witness_ok = check_witness(o.epsilon.after(o.gamma) - o.bottom.v, o.epsilon_witness);
  o.epsilon_iso = is_iso_in_homotopy(o.epsilon);
  return o;
}

}  // namespace hmon
