#include "hmon/stable_gp.hpp"

#include <algorithm>
#include <deque>

#include "hmon/error.hpp"

namespace hmon {

namespace {

constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 22;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  if (b != 0 && a > (std::uint64_t{1} << 62) / b) throw Error(ErrorCode::ParametersTooLarge, what);
  return a * b;
}

}  // namespace

RModuleMap coker_functor(const MonMorphism& psi) {
  const MonObject& f = psi.src();
  const MonObject& g = psi.tgt();
  const RingCtx& ctx = f.ctx();
  const Mat full = g.snf().U_inv * psi.psi0() * f.snf().U;
  std::vector<std::size_t> rows, cols;
  for (std::size_t j = 0; j < g.svals().size(); ++j)
    if (g.svals()[j] > 0) rows.push_back(j);
  for (std::size_t i = 0; i < f.svals().size(); ++i)
    if (f.svals()[i] > 0) cols.push_back(i);
  Mat m(ctx.base(), rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      m(a, b) = reduce_mod_pi_power(full(rows[a], cols[b]), ctx.base(), g.svals()[rows[a]], ctx.t()).lift();
  return RModuleMap{cokernel(f), cokernel(g), std::move(m)};
}

RModuleObj stable_class(const RModuleObj& m) {
  std::vector<int> e;
  for (int x : m.exps)
    if (x < m.ctx.t()) e.push_back(x);
  return RModuleObj::make(m.ctx, std::move(e));
}

RModuleObj syzygy(const RModuleObj& m) {
  std::vector<int> e;
  for (int x : m.exps)
    if (x < m.ctx.t()) e.push_back(m.ctx.t() - x);
  return RModuleObj::make(m.ctx, std::move(e));
}

RModuleObj cosyzygy(const RModuleObj& m) { return syzygy(m); }

RModuleObj transpose(const RModuleObj& m) {
  const RingCtx& ctx = m.ctx;
  const int t = ctx.t();
  std::vector<std::size_t> rel;  // generators carrying a relation
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] < t) rel.push_back(i);
  const std::size_t k = m.exps.size(), k2 = rel.size();
  // Minimal presentation R^{k2} -A-> R^k -> M; Tr M = Coker(A^T) over R.
  Mat big(ctx.base(), k2, k + k2);
  for (std::size_t r = 0; r < k2; ++r) {
    big(r, rel[r]) = ctx.pi_power(m.exps[rel[r]]);
    big(r, k + r) = ctx.omega();
  }
  std::vector<int> e;
  for (int s : snf(big).svals)
    if (s > 0 && s < t) e.push_back(s);
  return RModuleObj::make(ctx, std::move(e));
}

PeriodicResolution two_periodic_resolution(const MonObject& f, std::size_t terms) {
  const RingCtx& ctx = f.ctx();
  auto reduce = [&ctx](const Mat& a) {
    Mat r(ctx.base(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = reduce_mod_omega(a(i, j), ctx).lift();
    return r;
  };
  return PeriodicResolution{reduce(f.matrix()), reduce(f.sigma().matrix()), terms};
}

bool resolution_is_exact(const PeriodicResolution& res, const RingCtx& ctx) {
  const FiniteResidueRing R(ctx);
  const std::size_t n = res.f_bar.rows();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total = checked_mul(total, R.size(), "R^n too large to enumerate");
  if (total > kEnumerationLimit) throw Error(ErrorCode::ParametersTooLarge, "R^n too large to enumerate");
  auto encode_all = [&R](const Mat& a) {
    std::vector<std::uint64_t> c;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) c.push_back(R.encode(a(i, j)));
    return c;
  };
  const auto F = encode_all(res.f_bar), G = encode_all(res.fsig_bar);
  auto apply = [&](const std::vector<std::uint64_t>& mat, const std::vector<std::uint64_t>& x) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = R.add(acc, R.mul(mat[i * n + j], x[j]));
      key = key * R.size() + acc;
    }
    return key;
  };
  std::unordered_set<std::uint64_t> ker_f, ker_g, im_f, im_g;
  std::vector<std::uint64_t> x(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx, key = 0;
    for (std::size_t i = n; i-- > 0;) {
      x[i] = rest % R.size();
      rest /= R.size();
    }
    for (std::size_t i = 0; i < n; ++i) key = key * R.size() + x[i];
    const std::uint64_t fx = apply(F, x), gx = apply(G, x);
    im_f.insert(fx);
    im_g.insert(gx);
    if (fx == 0) ker_f.insert(key);
    if (gx == 0) ker_g.insert(key);
  }
  return ker_f == im_g && ker_g == im_f;
}

StableHomOracle::StableHomOracle(const RModuleObj& m, const RModuleObj& n) : R_(m.ctx), m_(m), n_(n) {
  if (!(m.ctx == n.ctx)) throw Error(ErrorCode::ContextMismatch, "modules over different rings");
  const int t = m.ctx.t();
  const std::size_t ns = m.exps.size(), nt = n.exps.size();
  // Hom(M, N): entry (j, i) is a multiple of pi^{max(e'_j - e_i, 0)} modulo pi^{e'_j}
  std::vector<std::vector<std::uint64_t>> choices(nt * ns);
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t i = 0; i < ns; ++i) {
      const int e = m.exps[i], e2 = n.exps[j], v = std::max(e2 - e, 0);
      for (std::uint64_t y = 0; y < R_.card(e2 - v); ++y)
        choices[j * ns + i].push_back(R_.truncate(R_.mul_pi_power(y, v), e2));
      hom_size_ = checked_mul(hom_size_, choices[j * ns + i].size(), "Hom(M, N) too large");
    }
  if (hom_size_ > kEnumerationLimit) throw Error(ErrorCode::ParametersTooLarge, "Hom(M, N) too large to enumerate");
  for (std::uint64_t idx = 0; idx < hom_size_; ++idx) {
    Cells c(nt * ns);
    std::uint64_t rest = idx;
    for (std::size_t cell = 0; cell < c.size(); ++cell) {
      c[cell] = choices[cell][rest % choices[cell].size()];
      rest /= choices[cell].size();
    }
    hom_.push_back(std::move(c));
  }

  // Maps M -> R^k (entry (l, i) killed by pi^{e_i}) and R^k -> N (anything).
  const std::size_t k = nt;
  std::vector<std::vector<std::uint64_t>> a_choices, b_choices;
  std::uint64_t a_count = 1, b_count = 1;
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < ns; ++i) {
      std::vector<std::uint64_t> v;
      for (std::uint64_t y = 0; y < R_.card(m.exps[i]); ++y) v.push_back(R_.mul_pi_power(y, t - m.exps[i]));
      a_count = checked_mul(a_count, v.size(), "Hom(M, R^k) too large");
      a_choices.push_back(std::move(v));
    }
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t l = 0; l < k; ++l) {
      std::vector<std::uint64_t> v;
      for (std::uint64_t y = 0; y < R_.card(n.exps[j]); ++y) v.push_back(y);
      b_count = checked_mul(b_count, v.size(), "Hom(R^k, N) too large");
      b_choices.push_back(std::move(v));
    }
  if (checked_mul(a_count, b_count, "composites too many") > kEnumerationLimit)
    throw Error(ErrorCode::ParametersTooLarge, "too many composites through R^k");
  auto decode = [](const std::vector<std::vector<std::uint64_t>>& ch, std::uint64_t idx) {
    std::vector<std::uint64_t> out(ch.size());
    for (std::size_t c = 0; c < ch.size(); ++c) {
      out[c] = ch[c][idx % ch[c].size()];
      idx /= ch[c].size();
    }
    return out;
  };
  std::unordered_set<std::uint64_t> gen_keys;
  std::vector<Cells> gens;
  for (std::uint64_t ai = 0; ai < a_count; ++ai) {
    const auto A = decode(a_choices, ai);
    for (std::uint64_t bi = 0; bi < b_count; ++bi) {
      const auto B = decode(b_choices, bi);
      Cells c(nt * ns);
      for (std::size_t j = 0; j < nt; ++j)
        for (std::size_t i = 0; i < ns; ++i) {
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < k; ++l) acc = R_.add(acc, R_.mul(B[j * k + l], A[l * ns + i]));
          c[j * ns + i] = R_.truncate(acc, n.exps[j]);
        }
      if (gen_keys.insert(key(c)).second) gens.push_back(std::move(c));
    }
  }
  // additive closure
  std::deque<Cells> queue{Cells(nt * ns, 0)};
  factoring_.insert(key(queue.front()));
  while (!queue.empty()) {
    const Cells x = queue.front();
    queue.pop_front();
    for (const Cells& g : gens) {
      Cells y = add(x, g);
      if (factoring_.insert(key(y)).second) queue.push_back(std::move(y));
    }
  }
}

std::uint64_t StableHomOracle::key(const Cells& c) const {
  const std::size_t ns = m_.exps.size();
  std::uint64_t k = 0;
  for (std::size_t cell = 0; cell < c.size(); ++cell) k = k * R_.card(n_.exps[cell / ns]) + c[cell];
  return k;
}

StableHomOracle::Cells StableHomOracle::add(const Cells& a, const Cells& b) const {
  const std::size_t ns = m_.exps.size();
  Cells c(a.size());
  for (std::size_t cell = 0; cell < a.size(); ++cell) c[cell] = R_.truncate(R_.add(a[cell], b[cell]), n_.exps[cell / ns]);
  return c;
}

StableHomOracle::Cells StableHomOracle::times_pi_power(const Cells& a, int j) const {
  const std::size_t ns = m_.exps.size();
  Cells c(a.size());
  for (std::size_t cell = 0; cell < a.size(); ++cell)
    c[cell] = R_.truncate(R_.mul_pi_power(a[cell], j), n_.exps[cell / ns]);
  return c;
}

std::vector<int> StableHomOracle::lengths() const {
  const int t = R_.ctx().t();
  const std::uint64_t k = R_.field_size(), base = factoring_.size();
  // c[j] = log_k |{x : pi^j x in F}| / |F| = sum over factors of min(l, j)
  std::vector<int> c(static_cast<std::size_t>(t) + 2, 0);
  for (int j = 1; j <= t; ++j) {
    std::uint64_t count = 0;
    for (const Cells& x : hom_)
      if (factoring_.count(key(times_pi_power(x, j)))) ++count;
    std::uint64_t ratio = count / base;
    int lg = 0;
    while (ratio > 1) {
      ratio /= k;
      ++lg;
    }
    c[static_cast<std::size_t>(j)] = lg;
  }
  c[static_cast<std::size_t>(t) + 1] = c[static_cast<std::size_t>(t)];
  std::vector<int> out;
  for (int j = 1; j <= t; ++j) {
    const auto J = static_cast<std::size_t>(j);
    const int at_least_j = c[J] - c[J - 1];
    const int at_least_next = c[J + 1] - c[J];
    for (int r = 0; r < at_least_j - at_least_next; ++r) out.push_back(j);
  }
  return out;
}

bool StableHomOracle::factors_through_projective(const RModuleMap& h) const {
  const std::size_t ns = m_.exps.size(), nt = n_.exps.size();
  if (h.m.rows() != nt || h.m.cols() != ns) throw Error(ErrorCode::ContextMismatch, "map shape does not match the oracle");
  Cells c(nt * ns);
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t i = 0; i < ns; ++i) c[j * ns + i] = R_.truncate(R_.encode(h.m(j, i)), n_.exps[j]);
  return factoring_.count(key(c)) > 0;
}

StableHomModule stable_hom_R_bruteforce(const RModuleObj& m, const RModuleObj& n) {
  return StableHomModule{StableHomOracle(m, n).lengths()};
}

bool FaithfulReport::all_pass() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.pass; });
}

FaithfulReport check_fully_faithful(const RingCtx& ctx, int max_s) {
  if (max_s < 0 || max_s > ctx.t()) throw Error(ErrorCode::ParametersTooLarge, "max_s must lie in [0, t]");
  std::vector<MonObject> objs;
  for (int s = 0; s <= max_s; ++s)
    objs.push_back(MonObject::validate(Mat::scalar(ctx.base(), 1, ctx.pi_power(s)), ctx));
  FaithfulReport rep;
  for (int s = 0; s <= max_s; ++s)
    for (int s2 = 0; s2 <= max_s; ++s2) {
      const auto& a = objs[static_cast<std::size_t>(s)];
      const auto& b = objs[static_cast<std::size_t>(s2)];
      PairReport p{s, s2, stable_hom(a, b).lengths, stable_hom_R_bruteforce(cokernel(a), cokernel(b)).lengths, false};
      p.pass = p.mon == p.oracle;
      rep.pairs.push_back(std::move(p));
    }
  return rep;
}

std::string format_lengths(const std::vector<int>& lengths) {
  std::string s = "[";
  for (std::size_t i = 0; i < lengths.size(); ++i) s += (i ? "," : "") + std::to_string(lengths[i]);
  return s + "]";
}

}  // namespace hmon
