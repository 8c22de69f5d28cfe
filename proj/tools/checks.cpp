#include "checks.hpp"

#include <algorithm>
#include <set>

#include "mseg/characters.hpp"
#include "mseg/graph.hpp"
#include "mseg/seg_crystal.hpp"
#include "mseg/signature.hpp"
#include "mseg/transport.hpp"

namespace mseg::tools {
namespace {

class Suite {
public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }

  SuiteResult done() { return std::move(r_); }

private:
  SuiteResult r_;
};

std::vector<Content> range(Content lo, Content hi) {
  std::vector<Content> out;
  for (Content c = lo; c <= hi; ++c) out.push_back(c);
  return out;
}

std::string at(const Multisegment& d, const char* op, Content i) {
  return std::string(op) + "_" + std::to_string(i) + " on " + d.label();
}

SuiteResult inverse_laws(const std::vector<Multisegment>& all) {
  Suite s("inverse-laws");
  for (const auto& d : all) {
    for (Content i = -4; i <= 4; ++i) {
      s.expect(apply_e(apply_f(d, i), i) == d, at(d, "EF", i));
      if (auto e = apply_e(d, i)) s.expect(apply_f(*e, i) == d, at(d, "FE", i));
      s.expect(apply_e_hat(apply_f_hat(d, i), i) == d, at(d, "EhatFhat", i));
      if (auto e = apply_e_hat(d, i)) s.expect(apply_f_hat(*e, i) == d, at(d, "FhatEhat", i));
    }
  }
  return s.done();
}

SuiteResult eps_laws(const std::vector<Multisegment>& all) {
  Suite s("eps-laws");
  for (const auto& d : all) {
    for (Content i = -4; i <= 4; ++i) {
      const auto e = apply_e(d, i);
      s.expect(e.has_value() == (eps(d, i) > 0), at(d, "E-defined", i));
      if (!e) continue;
      s.expect(eps(*e, i) == eps(d, i) - 1, at(d, "eps-drop", i));
      for (Content k : {i - 1, i + 1}) {
        const int diff = eps(*e, k) - eps(d, k);
        s.expect(diff == 0 || diff == 1, at(d, "eps-neighbour", i));
      }
    }
  }
  return s.done();
}

// Repeatedly deletes the first adjacent cancelling pair until none is left.
std::pair<int, int> naive_reduce(std::vector<Sign> w, Cancellation pattern) {
  const Sign first = pattern == Cancellation::MinusPlus ? Sign::Minus : Sign::Plus;
  const Sign second = first == Sign::Minus ? Sign::Plus : Sign::Minus;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] == first && w[k + 1] == second) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  const auto minus = static_cast<int>(std::count(w.begin(), w.end(), Sign::Minus));
  return {minus, static_cast<int>(w.size()) - minus};
}

SuiteResult signature_oracle(int max_len) {
  Suite s("signature-oracle");
  for (int len = 0; len <= max_len; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::vector<Sign> w;
      std::vector<SignatureToken> tokens;
      for (int k = 0; k < len; ++k) {
        w.push_back((bits >> k) & 1u ? Sign::Plus : Sign::Minus);
        tokens.push_back({w.back(), static_cast<std::size_t>(k)});
      }
      for (auto p : {Cancellation::MinusPlus, Cancellation::PlusMinus}) {
        const auto r = reduce(tokens, p);
        const auto [m, pl] = naive_reduce(w, p);
        s.expect(r.eps() == m && r.phi() == pl,
                 "word of length " + std::to_string(len) + " bits " + std::to_string(bits));
      }
    }
  }
  return s.done();
}

const std::vector<Weight>& test_weights() {
  static const std::vector<Weight> w{Weight{0}, Weight{0, 0}, Weight{1, 0}, Weight{2, 0},
                                     Weight{1, 0, 0}};
  return w;
}

SuiteResult transport_round_trip(int max_n) {
  Suite s("transport");
  const auto all = enumerate_multisegments(range(-2, 2), max_n);
  for (const auto& lambda : test_weights()) {
    std::set<std::string> images;
    for (const auto& d : all) {
      if (!cyclotomic_check(d, lambda)) continue;
      try {
        const auto mp = seg_to_mp(d, lambda);
        s.expect(delta_of_mp(mp) == d && is_kleshchev(mp), "seg_to_mp " + d.label());
        s.expect(images.insert(mp.label()).second, "seg_to_mp not injective at " + d.label());
      } catch (const Error& e) {
        s.expect(false, "seg_to_mp " + d.label() + ": " + e.what());
      }
    }
  }
  return s.done();
}

SuiteResult three_way(int max_n) {
  Suite s("three-way-graphs");
  for (const auto& lambda : test_weights()) {
    const auto r = verify_three_way(lambda, max_n);
    s.expect(r.ok(), lambda.to_string() + ": " + r.detail);
  }
  return s.done();
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int t = 2; t <= k; ++t) f *= static_cast<std::uint64_t>(t);
  return f;
}

SuiteResult beta_multiplicity(int max_n) {
  Suite s("beta-multiplicity");
  // Single-end multisegments ending at 0: partitions of lengths.
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      std::vector<Segment> segs;
      for (int len : p.parts()) segs.emplace_back(1 - len, 0);
      const Multisegment dj(segs);
      std::uint64_t expected = 1;
      for (int b : beta_of(dj).parts()) expected *= factorial(b);
      s.expect(multiplicity(char_of_ind(segs), q_word(dj)) == expected, dj.label());
    }
  }
  return s.done();
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(CheckLevel level) {
  const bool full = level == CheckLevel::Full;
  const auto all = enumerate_multisegments(range(-3, 3), full ? 7 : 6);
  return {
      signature_oracle(full ? 12 : 10),
      inverse_laws(all),
      eps_laws(all),
      transport_round_trip(full ? 6 : 5),
      three_way(full ? 6 : 5),
      beta_multiplicity(full ? 8 : 6),
  };
}

}  // namespace mseg::tools
