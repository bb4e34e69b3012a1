#include "stackzeta/spectrum.hpp"

#include <algorithm>

namespace stackzeta {

void BorelData::validate() const {
  if (dim < 1) throw std::domain_error("BorelData: group dimension must be positive");
  for (const auto& g : gens) {
    if (g.degree < 1 || g.degree % 2 == 0)
      throw std::domain_error("BorelData: generator degrees must be odd and positive");
    for (const auto& e : g.eigenvalues)
      if (e.weight < Rat(g.degree))
        throw std::domain_error("BorelData: eigenvalue weight below generator degree");
  }
}

BorelData borel_data_gm(long q) {
  return BorelData{1, {BorelGenerator{1, {WeilNum::q_power(q, 1)}}}};
}

BorelData borel_data_gl(int n, long q) {
  BorelData b;
  b.dim = n * n;
  for (int i = 1; i <= n; ++i)
    b.gens.push_back(BorelGenerator{2 * i - 1, {WeilNum::q_power(q, i)}});
  return b;
}

BorelData borel_data_norm_torus(long q) {
  return BorelData{1, {BorelGenerator{1, {WeilNum(AlgNum(Rat(-q)), Rat(2))}}}};
}

std::vector<Partition121> enumerate_partitions(const std::vector<int>& weights, int target) {
  std::vector<Partition121> out;
  std::vector<int> m(weights.size(), 0);
  auto rec = [&](auto&& self, size_t slot, int rem) -> void {
    if (slot == weights.size()) {
      if (rem == 0) out.push_back(Partition121{m});
      return;
    }
    if (slot + 1 == weights.size()) {
      if (rem % weights[slot] == 0) {
        m[slot] = rem / weights[slot];
        out.push_back(Partition121{m});
        m[slot] = 0;
      }
      return;
    }
    for (int k = 0; k * weights[slot] <= rem; ++k) {
      m[slot] = k;
      self(self, slot + 1, rem - k * weights[slot]);
    }
    m[slot] = 0;
  };
  if (weights.empty()) {
    if (target == 0) out.push_back(Partition121{{}});
    return out;
  }
  rec(rec, 0, target);
  return out;
}

void FrobSpectrum::add(int degree, WeilNum w) {
  entries_[degree].push_back(std::move(w));
}

void FrobSpectrum::sort_entries() {
  for (auto& [deg, v] : entries_) std::sort(v.begin(), v.end());
}

const std::vector<WeilNum>* FrobSpectrum::at(int degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

struct Slots {
  std::vector<int> weights;       // degree + 1, even
  std::vector<WeilNum> eigen;
};

Slots flatten(const BorelData& b) {
  Slots s;
  for (const auto& g : b.gens)
    for (const auto& e : g.eigenvalues) {
      s.weights.push_back(g.degree + 1);
      s.eigen.push_back(e);
    }
  return s;
}

}  // namespace

FrobSpectrum borel_spectrum(const BorelData& b, long q, int depth) {
  b.validate();
  Slots slots = flatten(b);
  int d = b.dim;
  FrobSpectrum spec(Rat(-d), -2 * d, depth, true);
  WeilNum qmd = WeilNum::q_power(q, -d);
  for (int r = 0; r <= depth; ++r) {
    for (const auto& part : enumerate_partitions(slots.weights, 2 * r)) {
      WeilNum ev = qmd;
      for (size_t j = 0; j < part.m.size(); ++j)
        for (int k = 0; k < part.m[j]; ++k) ev = ev * slots.eigen[j].inverse();
      spec.add(-2 * r - 2 * d, ev);
    }
  }
  spec.sort_entries();
  return spec;
}

FrobSpectrum borel_ordinary_spectrum(const BorelData& b, int depth) {
  b.validate();
  Slots slots = flatten(b);
  FrobSpectrum spec(Rat(-b.dim), 2 * depth, depth, true);
  for (int r = 0; r <= depth; ++r) {
    for (const auto& part : enumerate_partitions(slots.weights, 2 * r)) {
      WeilNum ev(AlgNum(Rat(1)), Rat(0));
      for (size_t j = 0; j < part.m.size(); ++j)
        for (int k = 0; k < part.m[j]; ++k) ev = ev * slots.eigen[j];
      spec.add(2 * r, ev);
    }
  }
  spec.sort_entries();
  return spec;
}

FrobSpectrum abelian_spectrum(const QuadField& f, int depth) {
  FrobSpectrum spec(Rat(-1), -2, depth, true);
  WeilNum alpha_inv = WeilNum::root(f).inverse();
  WeilNum beta_inv = WeilNum::conj_root(f).inverse();
  WeilNum qm1 = WeilNum::q_power(f.q, -1);
  for (int n = 0; n <= depth; ++n)
    for (int j = 0; j <= n; ++j)
      spec.add(-2 - 2 * n, qm1 * alpha_inv.pow(j) * beta_inv.pow(n - j));
  spec.sort_entries();
  return spec;
}

FrobSpectrum abelian_ordinary_spectrum(const QuadField& f, int depth) {
  FrobSpectrum spec(Rat(-1), 2 * depth, depth, true);
  WeilNum alpha = WeilNum::root(f);
  WeilNum beta = WeilNum::conj_root(f);
  for (int n = 0; n <= depth; ++n)
    for (int j = 0; j <= n; ++j)
      spec.add(2 * n, alpha.pow(j) * beta.pow(n - j));
  spec.sort_entries();
  return spec;
}

FrobSpectrum abelian_spectrum_split(const Rat& alpha, const Rat& beta, long q, int depth) {
  FrobSpectrum spec(Rat(-1), -2, depth, true);
  WeilNum ai(AlgNum(Rat(1) / alpha), Rat(-1));
  WeilNum bi(AlgNum(Rat(1) / beta), Rat(-1));
  WeilNum qm1 = WeilNum::q_power(q, -1);
  for (int n = 0; n <= depth; ++n)
    for (int j = 0; j <= n; ++j)
      spec.add(-2 - 2 * n, qm1 * ai.pow(j) * bi.pow(n - j));
  spec.sort_entries();
  return spec;
}

std::optional<FrobSpectrum> spectrum_of(const StackDescriptor& stack, int depth) {
  const WeilNum one(AlgNum(Rat(1)), Rat(0));
  if (std::holds_alternative<PointStack>(stack.v) ||
      std::holds_alternative<BFiniteStack>(stack.v)) {
    FrobSpectrum s(Rat(0), 0, depth);
    s.add(0, one);
    return s;
  }
  if (const auto* g = std::get_if<GmStack>(&stack.v)) {
    FrobSpectrum s(Rat(1), 2, depth);
    s.add(1, one);
    s.add(2, WeilNum::q_power(g->q, 1));
    return s;
  }
  if (const auto* a = std::get_if<AffineLineStack>(&stack.v)) {
    FrobSpectrum s(Rat(1), 2, depth);
    s.add(2, WeilNum::q_power(a->q, 1));
    return s;
  }
  if (const auto* p = std::get_if<P1Stack>(&stack.v)) {
    FrobSpectrum s(Rat(1), 2, depth);
    s.add(0, one);
    s.add(2, WeilNum::q_power(p->q, 1));
    return s;
  }
  if (const auto* b = std::get_if<BGmStack>(&stack.v))
    return borel_spectrum(borel_data_gm(b->q), b->q, depth);
  if (const auto* b = std::get_if<BGLStack>(&stack.v))
    return borel_spectrum(borel_data_gl(b->n, b->q), b->q, depth);
  if (const auto* b = std::get_if<BNormTorusStack>(&stack.v))
    return borel_spectrum(borel_data_norm_torus(b->q), b->q, depth);
  if (const auto* b = std::get_if<BEllipticStack>(&stack.v))
    return abelian_spectrum(QuadField(b->a, b->q), depth);
  return std::nullopt;
}

std::optional<FrobSpectrum> ordinary_spectrum_of(const StackDescriptor& stack, int depth) {
  if (const auto* b = std::get_if<BGmStack>(&stack.v))
    return borel_ordinary_spectrum(borel_data_gm(b->q), depth);
  if (const auto* b = std::get_if<BGLStack>(&stack.v))
    return borel_ordinary_spectrum(borel_data_gl(b->n, b->q), depth);
  if (const auto* b = std::get_if<BNormTorusStack>(&stack.v))
    return borel_ordinary_spectrum(borel_data_norm_torus(b->q), depth);
  if (const auto* b = std::get_if<BEllipticStack>(&stack.v))
    return abelian_ordinary_spectrum(QuadField(b->a, b->q), depth);
  return std::nullopt;
}

std::vector<Rat> charpoly(const FrobSpectrum& s, int degree) {
  const auto* evs = s.at(degree);
  if (!evs || evs->empty()) return {Rat(1)};
  std::vector<AlgNum> poly{AlgNum(Rat(1))};
  for (const auto& ev : *evs) {
    std::vector<AlgNum> next(poly.size() + 1, AlgNum(Rat(0)));
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] -= poly[k] * ev.value;
    }
    poly = std::move(next);
  }
  std::vector<Rat> out;
  out.reserve(poly.size());
  for (const auto& c : poly) {
    auto r = c.is_rational();
    if (!r)
      throw GaloisInstabilityError("charpoly: non-rational coefficient in degree " +
                                   std::to_string(degree) + " (malformed spectrum)");
    out.push_back(*r);
  }
  return out;
}

PoincareReport poincare_check(const FrobSpectrum& compact, const FrobSpectrum& ordinary,
                              long q, int dim_d, int depth) {
  PoincareReport rep;
  WeilNum qmd = WeilNum::q_power(q, -dim_d);
  for (int r = 0; r <= depth; ++r) {
    int cdeg = -2 * r - 2 * dim_d;
    const auto* cevs = compact.at(cdeg);
    const auto* oevs = ordinary.at(2 * r);
    std::vector<WeilNum> expected;
    if (oevs)
      for (const auto& g : *oevs) expected.push_back(qmd * g.inverse());
    std::sort(expected.begin(), expected.end());
    std::vector<WeilNum> got = cevs ? *cevs : std::vector<WeilNum>{};
    if (got != expected) {
      rep.pass = false;
      rep.mismatched_degrees.push_back(cdeg);
    }
  }
  return rep;
}

WeightAuditReport weight_audit(const FrobSpectrum& s, const Rat& dim, const Rat& w,
                               bool affine_stabilizers) {
  WeightAuditReport rep;
  for (const auto& [deg, evs] : s.entries()) {
    if (evs.empty()) continue;
    Rat half_deg(deg, 2);
    Rat bound = dim + half_deg + w;
    if (affine_stabilizers) {
      Rat affine_bound = Rat(deg) + w;
      if (affine_bound < bound) bound = affine_bound;
    }
    Rat max_weight = evs.front().weight;
    for (const auto& ev : evs)
      if (ev.weight > max_weight) max_weight = ev.weight;
    Rat slack = bound - max_weight;
    WeightAuditEntry e{deg, slack, slack == Rat(0), slack < Rat(0)};
    if (e.violation) rep.pass = false;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace stackzeta
