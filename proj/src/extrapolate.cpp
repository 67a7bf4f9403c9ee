#include "hamarch/extrapolate.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hamarch/errors.hpp"

namespace hamarch {

namespace {

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

template <class T>
std::vector<T> forward_diff(const std::vector<T>& v) {
  std::vector<T> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i + 1] - v[i]);
  return out;
}

template <class T>
struct Seq {
  int start = 0;
  std::vector<T> values;
};

template <class T>
Seq<T> richardson_impl(const Seq<T>& s, int k) {
  if (k < 1 || k + 1 > int(s.values.size()))
    throw Error("richardson: order k needs at least k+1 terms");
  std::vector<T> hat(s.values.size());
  for (std::size_t i = 0; i < hat.size(); ++i) {
    T w = T(1);
    for (int p = 0; p < k; ++p) w *= T(s.start + int(i));
    hat[i] = w * s.values[i];
  }
  for (int p = 0; p < k; ++p) hat = forward_diff(hat);
  T kfact = T(factorial(k));
  for (T& v : hat) v /= kfact;
  return {s.start, std::move(hat)};
}

// One Aitken level. Entries come with explicit indices so dropped points
// leave holes that later levels step around.
template <class T>
void aitken_level(std::vector<std::pair<int, T>>& entries, int level, std::vector<int>& dropped) {
  std::vector<std::pair<int, T>> next;
  T factor = T(level + 1) / T(level);
  for (std::size_t i = 0; i + 2 < entries.size(); ++i) {
    // needs three consecutive indices N-1, N, N+1
    if (entries[i + 1].first != entries[i].first + 1 ||
        entries[i + 2].first != entries[i].first + 2)
      continue;
    const T& a0 = entries[i].second;
    const T& a1 = entries[i + 1].second;
    const T& a2 = entries[i + 2].second;
    T d0 = a1 - a0;
    T d1 = a2 - a1;
    T d2 = d1 - d0;
    int idx = entries[i + 1].first;
    if (d2 == 0) {
      if (d0 == 0 && d1 == 0) {
        next.emplace_back(idx, a1);  // locally constant: correction vanishes
      } else {
        dropped.push_back(idx);  // affine run: transform undefined here
      }
      continue;
    }
    next.emplace_back(idx, a1 - factor * d1 * d0 / d2);
  }
  entries = std::move(next);
}

template <class T>
std::pair<Seq<T>, std::vector<int>> aitken_impl(const Seq<T>& s, int k) {
  if (k < 1) throw Error("aitken: level must be positive");
  if (int(s.values.size()) < 2 * k + 1) throw Error("aitken: not enough terms for level");
  std::vector<std::pair<int, T>> entries;
  for (std::size_t i = 0; i < s.values.size(); ++i)
    entries.emplace_back(s.start + int(i), s.values[i]);
  std::vector<int> dropped;
  for (int level = 1; level <= k; ++level) aitken_level(entries, level, dropped);
  // longest contiguous run ending at the deepest surviving index
  std::size_t begin = entries.size();
  while (begin > 0 &&
         (begin == entries.size() || entries[begin].first == entries[begin - 1].first + 1))
    --begin;
  Seq<T> out;
  if (begin < entries.size()) {
    out.start = entries[begin].first;
    for (std::size_t i = begin; i < entries.size(); ++i) out.values.push_back(entries[i].second);
  }
  return {std::move(out), std::move(dropped)};
}

Seq<Real> to_impl(const RealSeq& s) { return {s.start_index, s.values}; }

RealSeq from_impl(Seq<Real> s) {
  return RealSeq{s.start, std::move(s.values), real_precision()};
}

std::string real_str(const Real& v, unsigned digits) {
  return v.str(std::streamsize(digits));
}

}  // namespace

RealSeq ratio_seq(const CountSequence& t) {
  t.validate();
  if (t.entries.size() < 2) throw Error("ratio_seq needs at least 2 terms");
  RealSeq out;
  out.start_index = t.first_n();
  out.precision_digits = real_precision();
  for (std::size_t i = 0; i + 1 < t.entries.size(); ++i) {
    if (t.entries[i].second == 0) throw Error("ratio_seq: zero term");
    out.values.push_back(to_real(BigRational(t.entries[i + 1].second, t.entries[i].second)));
  }
  return out;
}

RealSeq logcurv_seq(const CountSequence& t) {
  t.validate();
  if (t.entries.size() < 3) throw Error("logcurv_seq needs at least 3 terms");
  RealSeq out;
  out.start_index = t.first_n();
  out.precision_digits = real_precision();
  for (std::size_t i = 0; i + 2 < t.entries.size(); ++i) {
    int n = t.first_n() + int(i);
    BigRational arg(t.entries[i + 2].second * t.entries[i].second,
                    t.entries[i + 1].second * t.entries[i + 1].second);
    out.values.push_back(Real(n) * Real(n) * log(to_real(arg)));
  }
  return out;
}

RealSeq richardson(const RealSeq& s, int k) { return from_impl(richardson_impl(to_impl(s), k)); }

RationalSeq richardson_exact(const RationalSeq& s, int k) {
  auto r = richardson_impl(Seq<BigRational>{s.start_index, s.values}, k);
  return RationalSeq{r.start, std::move(r.values)};
}

AitkenResult aitken(const RealSeq& s, int k) {
  auto [seq, dropped] = aitken_impl(to_impl(s), k);
  return AitkenResult{from_impl(std::move(seq)), std::move(dropped)};
}

AitkenExactResult aitken_exact(const RationalSeq& s, int k) {
  auto [seq, dropped] = aitken_impl(Seq<BigRational>{s.start_index, s.values}, k);
  return AitkenExactResult{RationalSeq{seq.start, std::move(seq.values)}, std::move(dropped)};
}

namespace {

// Number of leading significant digits on which all candidates agree.
int common_digits(const std::vector<Real>& candidates, unsigned precision) {
  if (candidates.empty()) return 0;
  int best = int(precision) - 2;
  for (int d = 1; d <= best; ++d) {
    std::string ref;
    for (const Real& c : candidates) {
      std::string s = c.str(d);  // scientific-style, d significant digits
      if (ref.empty()) {
        ref = s;
      } else if (s != ref) {
        return d - 1;
      }
    }
  }
  return best;
}

}  // namespace

Estimate estimate(const CountSequence& t, Quantity quantity, int k_max) {
  if (k_max < 1) throw Error("estimate: k_max must be positive");
  RealSeq obs = quantity == Quantity::GrowthRateSquared ? ratio_seq(t) : logcurv_seq(t);
  // N=0 sits outside the 1/N asymptotic form (b_0 is identically zero).
  if (obs.start_index < 1) {
    int trim = 1 - obs.start_index;
    if (int(obs.values.size()) <= trim) throw Error("estimate: not enough terms");
    obs.values.erase(obs.values.begin(), obs.values.begin() + trim);
    obs.start_index = 1;
  }

  int terms = int(obs.values.size());
  int k_star = std::min(k_max, terms - 2);  // deepest order with two output terms
  if (k_star < 1) throw Error("estimate: not enough terms for any acceleration level");

  Estimate est;
  auto& diag = est.diagnostics;
  for (int k = 1; k <= k_star; ++k)
    diag.richardson.push_back({k, richardson(obs, k)});
  int ait_max = std::min(3, k_max);
  for (int k = 1; k <= ait_max && 2 * k + 1 <= terms; ++k) {
    AitkenResult r = aitken(obs, k);
    if (r.seq.values.empty()) break;
    diag.aitken.push_back({k, std::move(r.seq)});
    diag.aitken_dropped.insert(diag.aitken_dropped.end(), r.dropped.begin(), r.dropped.end());
  }

  auto push_tail = [&](const std::vector<EstimateDiagnostics::Family>& fams) {
    if (fams.empty()) return;
    const RealSeq& deep = fams.back().seq;
    diag.candidates.push_back(deep.values.back());
    if (deep.values.size() >= 2) diag.candidates.push_back(deep.values[deep.values.size() - 2]);
    if (fams.size() >= 2) diag.candidates.push_back(fams[fams.size() - 2].seq.values.back());
  };
  push_tail(diag.richardson);
  push_tail(diag.aitken);

  est.value = diag.richardson.back().seq.values.back();
  auto [lo, hi] = std::minmax_element(diag.candidates.begin(), diag.candidates.end());
  Real spread = *hi - *lo;
  Real floor_eps = pow(Real(10), -int(real_precision()) + 4) * (1 + abs(est.value));
  est.uncertainty = spread > floor_eps ? spread : floor_eps;
  est.stable_digits = common_digits(diag.candidates, real_precision());
  diag.rule =
      "value: last element of deepest Richardson (k=" + std::to_string(k_star) +
      "); stable digits and uncertainty: spread over the two deepest members of each family";
  return est;
}

std::string Estimate::to_json_string() const {
  using nlohmann::json;
  unsigned digits = real_precision();
  json j;
  j["value"] = real_str(value, digits);
  j["uncertainty"] = real_str(uncertainty, 3);
  j["stable_digits"] = stable_digits;
  j["rule"] = diagnostics.rule;
  json fams = json::object();
  auto fam_json = [&](const std::vector<EstimateDiagnostics::Family>& fams_in) {
    json arr = json::array();
    for (const auto& f : fams_in) {
      json entry;
      entry["k"] = f.k;
      entry["start_index"] = f.seq.start_index;
      json vals = json::array();
      for (const Real& v : f.seq.values) vals.push_back(real_str(v, digits));
      entry["values"] = std::move(vals);
      arr.push_back(std::move(entry));
    }
    return arr;
  };
  fams["richardson"] = fam_json(diagnostics.richardson);
  fams["aitken"] = fam_json(diagnostics.aitken);
  if (!diagnostics.aitken_dropped.empty()) fams["aitken_dropped"] = diagnostics.aitken_dropped;
  json cands = json::array();
  for (const Real& c : diagnostics.candidates) cands.push_back(real_str(c, digits));
  fams["candidates"] = std::move(cands);
  j["diagnostics"] = std::move(fams);
  return j.dump(1) + "\n";
}

std::vector<std::vector<std::string>> Estimate::diagnostics_csv_rows() const {
  std::vector<std::vector<std::string>> rows;
  unsigned digits = real_precision();
  auto emit = [&](const char* family, const std::vector<EstimateDiagnostics::Family>& fams) {
    for (const auto& f : fams)
      for (std::size_t i = 0; i < f.seq.values.size(); ++i)
        rows.push_back({family, std::to_string(f.k),
                        std::to_string(f.seq.start_index + int(i)),
                        real_str(f.seq.values[i], digits)});
  };
  emit("richardson", diagnostics.richardson);
  emit("aitken", diagnostics.aitken);
  return rows;
}

}  // namespace hamarch
