// Graded random search for valid perfect algebras that drive find_codim1 into
// a chosen branch. Prints a JSON summary: the parameters, branch counts and
// the first algebra found for each outcome.

#include <chrono>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "nlie/codim1.hpp"
#include "nlie/io.hpp"
#include "nlie/oracle.hpp"

using namespace nlie;

int main(int argc, char** argv) {
  CLI::App app{"search for branch-coverage fixtures"};
  unsigned arity = 3;
  std::string field_text = "GF(2)";
  unsigned rank = 2;
  double density = 0.7;
  std::uint64_t tries = 100000;
  std::uint64_t seed = 0;
  std::string want;
  std::vector<std::string> weights;
  bool inner = false;
  bool exhaustive = false;
  app.add_option("--arity", arity)->check(CLI::Range(2, 8));
  app.add_option("--field", field_text);
  app.add_option("--rank", rank, "rank of the grading group F^r (0 = ungraded)");
  app.add_option("--density", density)->check(CLI::Range(0.0, 1.0));
  app.add_option("--tries", tries);
  app.add_option("--seed", seed);
  app.add_option("--branch", want, "stop at the first algebra reaching this branch");
  app.add_option("--weights", weights, "explicit weight per basis vector (scalar text); implies rank 1")
      ->delimiter(',');
  app.add_flag("--inner", inner, "force [e_1, ..., e_{n-1}, e_j] = w_j e_j for the explicit weights");
  app.add_flag("--exhaustive", exhaustive, "enumerate every assignment of the free constants of --weights");
  CLI11_PARSE(app, argc, argv);

  const Field f = parse_field(field_text);
  const std::size_t dim = arity + 2;
  std::vector<Scalar> w;
  for (const auto& s : weights) w.push_back(f.parse(s));
  if (!w.empty() && w.size() != dim) {
    std::cerr << "need " << dim << " weights\n";
    return 4;
  }
  // Free (tuple, coordinate) slots of the explicit grading.
  struct Slot {
    IndexTuple idx;
    std::size_t coord;
  };
  std::vector<Slot> slots;
  StructureTensor fixed(f, arity, dim);
  if (!w.empty()) {
    for (const auto& idx : increasing_tuples(dim, arity)) {
      const bool forced = inner && idx.back() >= arity - 1 && idx[arity - 2] == arity - 2;
      if (forced) {
        Vector v(f, dim);
        v[idx.back()] = w[idx.back()];
        fixed.set(idx, std::move(v));
        continue;
      }
      Scalar sum = f.zero();
      for (std::size_t i : idx) sum += w[i];
      for (std::size_t j = 0; j < dim; ++j) {
        if (w[j] == sum) slots.push_back({idx, j});
      }
    }
  }
  auto fill = [&](const std::vector<Scalar>& values) {
    StructureTensor t = fixed;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (values[i].is_zero()) continue;
      Vector v = t.value(slots[i].idx);
      v[slots[i].coord] = values[i];
      t.set(slots[i].idx, std::move(v));
    }
    return t;
  };
  std::vector<std::uint64_t> digits(slots.size(), 0);
  if (exhaustive) {
    if (w.empty() || !f.is_finite()) {
      std::cerr << "--exhaustive needs --weights over a finite field\n";
      return 4;
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (total > tries / *f.order()) {
        std::cerr << slots.size() << " free constants exceed --tries " << tries << "\n";
        return 4;
      }
      total *= *f.order();
    }
    tries = total;
  }
  Rng rng(seed);
  auto draw = [&]() {
    if (w.empty()) {
      return rank == 0 ? sparse_tensor(arity, dim, f, density, rng) : graded_tensor(arity, dim, f, rank, density, rng);
    }
    std::vector<Scalar> values;
    if (exhaustive) {
      for (auto dgt : digits) values.push_back(f.element(dgt));
      std::size_t i = digits.size();
      while (i > 0 && digits[i - 1] + 1 == *f.order()) digits[--i] = 0;
      if (i > 0) ++digits[i - 1];
    } else {
      for (std::size_t i = 0; i < slots.size(); ++i) {
        values.push_back(rng.chance(density) ? random_scalar(rng, f) : f.zero());
      }
    }
    return fill(values);
  };
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, Json> first;
  std::uint64_t valid = 0, perfect = 0, done = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (; done < tries; ++done) {
    NLieAlgebra a = NLieAlgebra::checked(draw());
    if (a.validity() != Validity::Valid) continue;
    ++valid;
    if (!derived_algebra(a).is_full()) continue;
    ++perfect;
    std::string key;
    try {
      const Codim1Result r = find_codim1(a);
      key = std::string(to_string(r.trace.branch));
    } catch (const Error& e) {
      key = std::string(to_string(e.code()));
    }
    if (counts[key]++ == 0) first[key] = algebra_json(a.tensor());
    if (!want.empty() && key == want) {
      ++done;
      break;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Json out;
  out["arity"] = arity;
  out["field"] = field_json(f);
  out["rank"] = w.empty() ? rank : 1;
  if (!w.empty()) {
    out["weights"] = weights;
    out["inner"] = inner;
    out["free_constants"] = slots.size();
    out["exhaustive"] = exhaustive;
  }
  out["density"] = density;
  out["seed"] = seed;
  out["tries"] = done;
  out["valid"] = valid;
  out["perfect"] = perfect;
  out["seconds"] = secs;
  Json c = Json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  out["outcomes"] = c;
  Json ex = Json::object();
  for (const auto& [k, v] : first) ex[k] = v;
  out["examples"] = ex;
  std::cout << out.dump(2) << "\n";
  return want.empty() || counts.count(want) ? 0 : 2;
}
