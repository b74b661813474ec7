#include <mutex>

#include "sadic/sequence.hpp"

namespace sadic {

namespace {

Alphabet binary() { return Alphabet({"0", "1"}); }

// tau(0) = 011, tau(1) = 0^2 1 0^3 1 ... 0^a 1.
Morphism rank2_morphism(const BigInt& a) {
  BigInt zeros1 = a * (a + 1) / 2 - 1;
  BigInt ones1 = a - 1;
  if (zeros1 + ones1 <= kExplicitLetterBudget) {
    auto aa = static_cast<std::uint64_t>(a);
    Word w1;
    for (std::uint64_t j = 2; j <= aa; ++j) {
      w1.insert(w1.end(), j, 0);
      w1.push_back(1);
    }
    return Morphism(binary(), binary(), {Word{0, 1, 1}, std::move(w1)});
  }
  Morphism::Profile p;
  p.incidence = IncidenceMatrix(2, 2);
  p.incidence.at(0, 0) = 1;
  p.incidence.at(1, 0) = 2;
  p.incidence.at(0, 1) = zeros1;
  p.incidence.at(1, 1) = ones1;
  p.first = {0, 0};
  p.last = {1, 1};
  p.pairs = {
      PairCounts{{{0, 1}, BigInt(1)}, {{1, 1}, BigInt(1)}},
      PairCounts{{{0, 0}, (a - 1) * a / 2}, {{0, 1}, a - 1}, {{1, 0}, a - 2}},
  };
  // 2(a-1) runs; kept while that stays small so covers can still be cut from tau(1).
  if (2 * (a - 1) <= kExplicitLetterBudget) {
    auto aa = static_cast<std::uint64_t>(a);
    RunImage r1;
    for (std::uint64_t j = 2; j <= aa; ++j) {
      r1.emplace_back(0, j);
      r1.emplace_back(1, 1);
    }
    p.run_images = {RunImage{{0, 1}, {1, 2}}, std::move(r1)};
  }
  return Morphism::from_profile(binary(), binary(), std::move(p));
}

struct Rank2State {
  Rank2Params params;
  std::mutex mu;
  Rank2Constants c;

  void extend(std::size_t n) {
    while (c.a.size() <= n) {
      std::size_t k = c.a.size();
      BigInt a = k == 0 ? BigInt(params.a0)
                        : BigInt((BigInt(3 * (k - 1) + 4) * c.A[k - 1]) / c.B[k - 1]) + params.margin;
      BigInt prevA = k == 0 ? BigInt(1) : c.A[k - 1];
      BigInt prevB = k == 0 ? BigInt(1) : c.B[k - 1];
      BigInt zeros1 = a * (a + 1) / 2 - 1;
      c.a.push_back(a);
      c.A.push_back(zeros1 * prevB + (a - 1) * prevA);
      c.B.push_back(prevB + 2 * prevA);
      c.C.push_back(k == 0 ? BigInt(1) : c.C[k - 1] + c.B[k - 1]);
    }
  }
};

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw Error("");
    return x;
  } catch (...) {
    throw Error("generator parameter " + key + " must be a non-negative integer, got '" + v + "'");
  }
}

}  // namespace

Rank2Constants rank2_constants(Rank2Params params, std::size_t levels) {
  Rank2State st;
  st.params = params;
  if (levels) st.extend(levels - 1);
  return st.c;
}

DirectiveSequence rank2_superlinear_sequence(Rank2Params params) {
  if (params.a0 < 2) throw Error("rank2_superlinear needs a0 >= 2");
  if (params.margin < 1) throw Error("rank2_superlinear needs margin >= 1");
  auto st = std::make_shared<Rank2State>();
  st->params = params;
  GeneratorSpec spec{"rank2_superlinear",
                     {{"a0", std::to_string(params.a0)}, {"margin", std::to_string(params.margin)}}};
  return DirectiveSequence::generated({}, spec, [st](std::size_t n, const DirectiveSequence&) {
    std::lock_guard<std::mutex> lock(st->mu);
    st->extend(n);
    return rank2_morphism(st->c.a[n]);
  });
}

DirectiveSequence make_generated(const GeneratorSpec& spec, std::vector<Morphism> preamble) {
  if (spec.name == "rank2_superlinear") {
    if (!preamble.empty()) throw Error("generator rank2_superlinear does not take morphism blocks");
    Rank2Params p;
    for (const auto& [k, v] : spec.params) {
      if (k == "a0") p.a0 = parse_u64(k, v);
      else if (k == "margin") p.margin = parse_u64(k, v);
      else throw Error("unknown parameter '" + k + "' for generator rank2_superlinear");
    }
    return rank2_superlinear_sequence(p);
  }
  throw Error("unknown generator '" + spec.name + "'");
}

}  // namespace sadic
