#include "mulideal/theorems.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "mulideal/errors.hpp"
#include "mulideal/howald.hpp"
#include "mulideal/io.hpp"

namespace mulideal {

namespace {

using io::Json;

const Rational kHalf(mpz_class(1), mpz_class(2));
const Rational kThreeHalves(mpz_class(3), mpz_class(2));

void merge_into(CheckReport& target, const CheckReport& part) {
  for (const auto& c : part.comparisons) {
    Comparison copy = c;
    copy.label = part.name + ": " + c.label;
    std::optional<Rational> coefficient;
    if (!c.holds && part.witness && part.witness->comparison == c.label) coefficient = part.witness->coefficient;
    target.add(std::move(copy), coefficient);
  }
  for (const auto& [key, value] : part.notes.items()) target.notes[part.name + "." + key] = value;
}

}  // namespace

CheckReport check_skoda(const MonomialIdeal& a, std::int64_t m, const MonomialIdeal& b, const Rational& c,
                        const Limits& limits) {
  const auto d = static_cast<std::int64_t>(a.dimension());
  if (a.dimension() != b.dimension()) throw InputError("dimension mismatch");
  if (m < d) {
    throw InputError("Skoda's theorem needs m >= d (m = " + std::to_string(m) + ", d = " + std::to_string(d) + ")");
  }
  if (c.sign() < 0) throw InputError("coefficient must be non-negative");

  CheckReport report;
  report.name = "skoda";
  report.instance = Json{{"a", io::ideal_json(a)}, {"m", m}, {"b", io::ideal_json(b)}, {"c", c.to_string()}};

  const Rational mr(m);
  const auto lhs = mixed_multiplier_ideal(a, mr, b, c, limits);
  report.add(compare_equal("J(a^m b^c) = a * J(a^(m-1) b^c)", lhs,
                           product(a, mixed_multiplier_ideal(a, Rational(m - 1), b, c, limits))),
             mr);
  report.add(compare_equal("J(a^m b^c) = a^(m+1-d) * J(a^(d-1) b^c)", lhs,
                           product(power(a, m + 1 - d), mixed_multiplier_ideal(a, Rational(d - 1), b, c, limits))),
             mr);
  return report;
}

CheckReport check_subadditivity(const MonomialIdeal& a, const Rational& c, const MonomialIdeal& b,
                                const Rational& e, const Limits& limits) {
  if (a.dimension() != b.dimension()) throw InputError("dimension mismatch");
  if (c.sign() < 0 || e.sign() < 0) throw InputError("coefficients must be non-negative");
  CheckReport report;
  report.name = "subadditivity";
  report.instance =
      Json{{"a", io::ideal_json(a)}, {"c", c.to_string()}, {"b", io::ideal_json(b)}, {"e", e.to_string()}};
  report.add(compare_subset("J(a^c b^e) ⊆ J(a^c) * J(b^e)", mixed_multiplier_ideal(a, c, b, e, limits),
                            product(multiplier_ideal(a, c, limits), multiplier_ideal(b, e, limits))),
             c);
  return report;
}

CheckReport check_restriction(const MonomialIdeal& a, std::size_t index, const Rational& c, const Limits& limits) {
  const auto restricted = restrict_to_hyperplane(a, index);  // throws on a ⊆ (x_index)
  CheckReport report;
  report.name = "restriction";
  report.instance = Json{{"a", io::ideal_json(a)}, {"k", index + 1}, {"c", c.to_string()}};
  // J(a^c) ⊇ a, so its restriction is nonzero whenever a's is.
  report.add(compare_subset("J(a|H ^c) ⊆ J(a^c)|H", multiplier_ideal(restricted, c, limits),
                            restrict_to_hyperplane(multiplier_ideal(a, c, limits), index)),
             c);
  return report;
}

CheckReport check_mustata_chain(const MonomialIdeal& a, const Rational& bound, const Limits& limits) {
  const auto seq = jumping_numbers(a, bound, limits);
  const auto root = radical(a);
  CheckReport report;
  report.name = "mustata";
  report.instance = Json{{"a", io::ideal_json(a)}, {"T", bound.to_string()}};
  Json jumps = Json::array();
  for (const auto& j : seq.jumps) jumps.push_back(j.value.to_string());
  report.notes["jumps"] = jumps;

  MonomialIdeal previous = MonomialIdeal::unit(a.dimension());
  Rational previous_value(0);
  for (std::size_t i = 0; i < seq.jumps.size(); ++i) {
    const auto& jump = seq.jumps[i];
    report.add(compare_subset("sqrt(a) * J(a^" + previous_value.to_string() + ") ⊆ J(a^" +
                                  jump.value.to_string() + ")",
                              product(root, previous), jump.ideal_after),
               jump.value);
    report.add(compare_subset("sqrt(a)^" + std::to_string(i + 1) + " ⊆ J(a^" + jump.value.to_string() + ")",
                              power(root, static_cast<std::int64_t>(i + 1)), jump.ideal_after),
               jump.value);
    previous = jump.ideal_after;
    previous_value = jump.value;
  }
  return report;
}

CheckReport check_lct_bounds(const MonomialIdeal& a, const Limits& limits) {
  CheckReport report;
  report.name = "lct-bounds";
  report.instance = Json{{"a", io::ideal_json(a)}};
  const Rational threshold = lct(a, limits);
  const Rational ord(a.order());
  const Rational lower = Rational(1) / ord;
  const Rational upper = Rational(static_cast<long>(a.dimension())) / ord;
  report.notes["lct"] = threshold.to_string();
  report.notes["lower"] = lower.to_string();
  report.notes["upper"] = upper.to_string();
  // lct <= d/ord  <=>  J(a^(d/ord)) is a proper ideal.
  report.add(compare_subset("J(a^(d/ord)) ⊆ m", multiplier_ideal(a, upper, limits),
                            MonomialIdeal::maximal(a.dimension())),
             upper);
  if (threshold < lower) {
    // J(a^lct) is proper although lct < 1/ord; the origin separates it from (1).
    report.add(Comparison{"J(a^c) = (1) for c < 1/ord", Relation::Equal, MonomialIdeal::unit(a.dimension()),
                          multiplier_ideal(a, threshold, limits), false, ExponentVector::zero(a.dimension())},
               threshold);
  }
  return report;
}

NullstellensatzResult nullstellensatz_sigma(const MonomialIdeal& a, const Limits& limits) {
  const auto d = static_cast<long>(a.dimension());
  // Jumps recur with period 1 and lct <= d, so some jump lies in [d, d+1].
  const auto seq = jumping_numbers(a, Rational(d + 1), limits);
  std::int64_t sigma = 0;
  for (std::size_t i = 0; i < seq.jumps.size(); ++i) {
    if (seq.jumps[i].value >= Rational(d)) {
      sigma = static_cast<std::int64_t>(i + 1);
      break;
    }
  }
  if (sigma == 0) throw std::logic_error("no jumping number in [d, d+1]");

  NullstellensatzResult out;
  out.sigma = sigma;
  out.report.name = "nullstellensatz";
  out.report.instance = Json{{"a", io::ideal_json(a)}};
  out.report.notes["sigma"] = sigma;
  out.report.notes["xi_sigma"] = seq.jumps[static_cast<std::size_t>(sigma - 1)].value.to_string();
  out.report.add(compare_subset("sqrt(a)^sigma ⊆ a", power(radical(a), sigma), a));
  return out;
}

MonomialIdeal InstanceGenerator::operator()(std::mt19937_64& rng) const {
  const std::size_t d = 1 + static_cast<std::size_t>(rng() % max_dimension);
  return (*this)(rng, d);
}

MonomialIdeal InstanceGenerator::operator()(std::mt19937_64& rng, std::size_t dimension) const {
  const std::size_t count = 1 + static_cast<std::size_t>(rng() % max_generators);
  std::vector<ExponentVector> gens;
  while (gens.size() < count) {
    std::vector<std::int64_t> c(dimension);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_exponent + 1));
    if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; })) continue;
    gens.emplace_back(std::move(c));
  }
  return MonomialIdeal::minimalize(dimension, std::move(gens));
}

CheckReport campaign_instance(std::uint64_t seed, std::size_t index, const Limits& limits) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  const InstanceGenerator generate;
  const MonomialIdeal a = generate(rng);
  const std::size_t d = a.dimension();
  const MonomialIdeal b = generate(rng, d);

  CheckReport report;
  report.name = "campaign";
  report.seed = seed;
  report.instance = Json{{"index", index}, {"a", io::ideal_json(a)}, {"b", io::ideal_json(b)}};

  const auto unit = MonomialIdeal::unit(d);
  const auto dd = static_cast<std::int64_t>(d);
  for (std::int64_t m : {dd, dd + 1}) {
    merge_into(report, check_skoda(a, m, unit, Rational(0), limits));
    merge_into(report, check_skoda(a, m, b, kHalf, limits));
  }
  for (const auto& c : {kHalf, Rational(1), kThreeHalves}) {
    for (const auto& e : {kHalf, Rational(1), kThreeHalves}) {
      merge_into(report, check_subadditivity(a, c, b, e, limits));
    }
  }
  if (d >= 2) {
    for (std::size_t k = 0; k < d; ++k) {
      const bool admissible = std::any_of(a.generators().begin(), a.generators().end(),
                                          [&](const ExponentVector& g) { return g[k] == 0; });
      if (admissible) merge_into(report, check_restriction(a, k, Rational(1), limits));
    }
  }
  merge_into(report, check_mustata_chain(a, Rational(dd + 2), limits));
  merge_into(report, check_lct_bounds(a, limits));
  return report;
}

std::vector<CheckReport> run_campaign(std::uint64_t seed, std::size_t count, const Limits& limits) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::vector<std::future<std::vector<CheckReport>>> parts;
  for (std::size_t w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [=, &limits] {
      std::vector<CheckReport> out;
      for (std::size_t i = w; i < count; i += workers) out.push_back(campaign_instance(seed, i, limits));
      return out;
    }));
  }
  std::vector<std::vector<CheckReport>> results;
  for (auto& p : parts) results.push_back(p.get());
  std::vector<CheckReport> ordered;
  ordered.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ordered.push_back(std::move(results[i % workers][i / workers]));
  return ordered;
}

}  // namespace mulideal
