// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/pwl.hpp"

#include "hmodlab/errors.hpp"

#include <algorithm>
#include <string>

namespace hmod {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  // (b - a) x (c - a) == 0
  return (b.v - a.v) * (c.t - a.t) == (c.v - a.v) * (b.t - a.t);
}

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& t) {
  if (t == a.t) return a.v;
  if (t == b.t) return b.v;
  return a.v + (b.v - a.v) * (t - a.t) / (b.t - a.t);
}

// Values of f at a sorted list of abscissae, in one forward sweep.
std::vector<Rational> sample_sorted(const PwlFunc& f, std::span<const Rational> ts) {
  std::vector<Rational> out;
  out.reserve(ts.size());
  auto pts = f.breakpoints();
  std::size_t seg = 0;
  for (const Rational& t : ts) {
    while (seg + 2 < pts.size() && pts[seg + 1].t < t) ++seg;
    out.push_back(interpolate(pts[seg], pts[seg + 1], t));
  }
  return out;
}

void check_q(const Rational& q) {
  if (q.sign() <= 0 || q > Rational(1))
    throw ParameterError("q must lie in (0,1], got " + q.str());
}

}  // namespace

std::vector<Breakpoint> canonical_points(std::vector<Breakpoint> points) {
  if (points.size() <= 2) return points;
  std::vector<Breakpoint> out;
  out.reserve(points.size());
  out.push_back(std::move(points.front()));
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (!collinear(out.back(), points[i], points[i + 1])) out.push_back(std::move(points[i]));
  }
  out.push_back(std::move(points.back()));
  return out;
}

PwlFunc::PwlFunc() : points_{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}} {}

PwlFunc PwlFunc::from_points(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw DomainError("a PWL function needs at least two breakpoints");
  if (points.front().t != Rational(0) || points.back().t != Rational(1))
    throw DomainError("PWL abscissae must start at 0 and end at 1");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1].t < points[i].t))
      throw DomainError("PWL abscissae must be strictly increasing (at " + points[i].t.str() + ")");
  return PwlFunc(canonical_points(std::move(points)));
}

PwlFunc PwlFunc::constant(const Rational& c) { return PwlFunc({{Rational(0), c}, {Rational(1), c}}); }

PwlFunc PwlFunc::affine(const Rational& slope, const Rational& intercept) {
  return PwlFunc({{Rational(0), intercept}, {Rational(1), slope + intercept}});
}

Rational PwlFunc::operator()(const Rational& t) const {
  if (t.sign() < 0 || t > Rational(1))
    throw DomainError("PWL evaluation outside [0,1]: t = " + t.str());
  auto it = std::upper_bound(points_.begin(), points_.end(), t,
                             [](const Rational& x, const Breakpoint& p) { return x < p.t; });
  if (it == points_.end()) return points_.back().v;
  return interpolate(*(it - 1), *it, t);
}

bool PwlFunc::is_zero() const {
  return std::all_of(points_.begin(), points_.end(), [](const Breakpoint& p) { return p.v.is_zero(); });
}

bool PwlFunc::is_nonnegative() const {
  return std::all_of(points_.begin(), points_.end(), [](const Breakpoint& p) { return p.v.sign() >= 0; });
}

std::pair<Rational, Rational> PwlFunc::range(const Rational& a, const Rational& b) const {
  if (b < a) throw DomainError("empty range [" + a.str() + ", " + b.str() + "]");
  Rational lo = (*this)(a);
  Rational hi = lo;
  auto consider = [&](const Rational& v) {
    if (v < lo) lo = v;
    if (hi < v) hi = v;
  };
  consider((*this)(b));
  for (const Breakpoint& p : points_)
    if (a < p.t && p.t < b) consider(p.v);
  return {lo, hi};
}

PwlFunc PwlFunc::scaled(const Rational& c) const {
  if (c.is_zero()) return PwlFunc();
  std::vector<Breakpoint> pts = points_;
  for (Breakpoint& p : pts) p.v *= c;
  return PwlFunc(std::move(pts));
}

std::strong_ordering operator<=>(const PwlFunc& a, const PwlFunc& b) {
  if (auto c = a.points_.size() <=> b.points_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.points_.size(); ++i) {
    if (auto c = a.points_[i].t <=> b.points_[i].t; c != 0) return c;
    if (auto c = a.points_[i].v <=> b.points_[i].v; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<Rational> merged_abscissae(std::span<const PwlFunc* const> fs) {
  std::vector<Rational> ts;
  for (const PwlFunc* f : fs)
    for (const Breakpoint& p : f->breakpoints()) ts.push_back(p.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

PwlFunc pwl_lincomb(std::span<const PwlTerm> terms) {
  std::vector<const PwlFunc*> fs;
  for (const auto& [c, f] : terms)
    if (!c.is_zero()) fs.push_back(&f);
  if (fs.empty()) return PwlFunc();

  const std::vector<Rational> ts = merged_abscissae(fs);
  std::vector<Rational> acc(ts.size());
  for (const auto& [c, f] : terms) {
    if (c.is_zero()) continue;
    const std::vector<Rational> vals = sample_sorted(f, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) acc[i] += c * vals[i];
  }
  std::vector<Breakpoint> pts;
  pts.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) pts.push_back({ts[i], std::move(acc[i])});
  return PwlFunc::from_points(std::move(pts));
}

PwlFunc pwl_meet_join(const PwlFunc& f, const PwlFunc& g, Extremum mode) {
  const PwlFunc* fs[] = {&f, &g};
  const std::vector<Rational> base = merged_abscissae(fs);
  const std::vector<Rational> fv = sample_sorted(f, base);
  const std::vector<Rational> gv = sample_sorted(g, base);

  auto pick = [mode](const Rational& a, const Rational& b) {
    return mode == Extremum::Min ? min(a, b) : max(a, b);
  };

  std::vector<Breakpoint> pts;
  pts.push_back({base[0], pick(fv[0], gv[0])});
  for (std::size_t i = 1; i < base.size(); ++i) {
    const Rational d0 = fv[i - 1] - gv[i - 1];
    const Rational d1 = fv[i] - gv[i];
    if (d0.sign() * d1.sign() < 0) {
      // both differences are affine on the segment, so the crossing is rational
      const Rational t = base[i - 1] + (base[i] - base[i - 1]) * d0 / (d0 - d1);
      pts.push_back({t, f(t)});
    }
    pts.push_back({base[i], pick(fv[i], gv[i])});
  }
  return PwlFunc::from_points(std::move(pts));
}

Rational pwl_sup_norm(const PwlFunc& f) {
  Rational best(0);
  for (const Breakpoint& p : f.breakpoints()) best = max(best, p.v.abs());
  return best;
}

PwlFunc make_f(const Rational& q, long m) {
  check_q(q);
  if (m < 0) throw ParameterError("m must be >= 0, got " + std::to_string(m));
  if (m == 0) return PwlFunc();
  const Rational mm(m);
  auto value = [&](const Rational& t) { return max(Rational(0), min(Rational(1), mm * (q - t))); };

  std::vector<Rational> ts{Rational(0), max(Rational(0), q - mm.inverse()), q, Rational(1)};
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Breakpoint> pts;
  for (const Rational& t : ts) pts.push_back({t, value(t)});
  return PwlFunc::from_points(std::move(pts));
}

PwlFunc psi_sq(const Rational& q, long m) {
  if (m < 1) throw ParameterError("psi index m must be >= 1, got " + std::to_string(m));
  return make_f(q, m) - make_f(q, m - 1);
}

PwlFunc make_hat(const Rational& c) {
  if (c.sign() < 0 || c > Rational(1)) throw ParameterError("hat centre must lie in [0,1], got " + c.str());
  std::vector<Breakpoint> pts{{Rational(0), c}};
  if (c.sign() > 0 && c < Rational(1)) pts.push_back({c, Rational(0)});
  pts.push_back({Rational(1), Rational(1) - c});
  return PwlFunc::from_points(std::move(pts));
}

}  // namespace hmod
