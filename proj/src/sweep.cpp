#include "robe/sweep.hpp"

#include <ostream>
#include <thread>

#include "robe/equilibria.hpp"
#include "robe/format.hpp"

namespace robe {

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::ok: return "ok";
    case CellStatus::no_equilibrium: return "no_equilibrium";
    default: return "solver_failure";
  }
}

namespace {

void validate(const SweepSpec& spec) {
  for (const RangeSpec* r : {&spec.mu, &spec.a1, &spec.k}) {
    if (!(r->start <= r->stop)) throw std::domain_error("run_sweep: range start must be <= stop");
    if (r->count < 1) throw std::domain_error("run_sweep: range count must be >= 1");
  }
  const long long cells = static_cast<long long>(spec.mu.count) * spec.a1.count * spec.k.count;
  if (cells > 100000000LL) throw std::domain_error("run_sweep: more than 1e8 cells requested");
  // Fail on invalid parameter boxes up front instead of per cell.
  make_params(spec.mu.start, spec.a1.start, spec.k.start);
  make_params(spec.mu.count > 1 ? spec.mu.stop : spec.mu.start,
              spec.a1.count > 1 ? spec.a1.stop : spec.a1.start,
              spec.k.count > 1 ? spec.k.stop : spec.k.start);
}

SweepRecord evaluate_cell(double mu, double a1, double k, Flavor flavor) {
  SweepRecord rec;
  rec.mu = mu;
  rec.a1 = a1;
  rec.k = k;
  try {
    const ModelParams par = make_params(mu, a1, k);
    const EquilibriumPoint eq =
        flavor == Flavor::numeric ? primary_equilibrium(par) : paper_equilibrium(par);
    rec.x_eq = eq.x;
    const StabilityReport rep = classify(par, eq, flavor);
    rec.discriminant = rep.discriminant;
    rec.verdict_planar = rep.verdict_planar;
    rec.verdict_vertical = rep.verdict_vertical;
    rec.max_re_lambda = rep.max_re_lambda;
    rec.status = CellStatus::ok;
  } catch (const NoSignChangeError&) {
    rec.status = CellStatus::no_equilibrium;
  } catch (const NumericalError&) {
    rec.status = CellStatus::solver_failure;
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  validate(spec);
  const long long total = static_cast<long long>(spec.mu.count) * spec.a1.count * spec.k.count;
  std::vector<SweepRecord> records(static_cast<size_t>(total));

  unsigned workers = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<long long>(workers, total));

  auto work = [&](unsigned worker) {
    for (long long idx = worker; idx < total; idx += workers) {
      const int mu_i = static_cast<int>(idx % spec.mu.count);
      const int k_i = static_cast<int>((idx / spec.mu.count) % spec.k.count);
      const int a1_i = static_cast<int>(idx / (static_cast<long long>(spec.mu.count) * spec.k.count));
      records[static_cast<size_t>(idx)] =
          evaluate_cell(spec.mu.at(mu_i), spec.a1.at(a1_i), spec.k.at(k_i), spec.flavor);
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  return records;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
  os << kSweepCsvHeader << "\n";
  for (const auto& r : records) {
    os << num17(r.mu) << ',' << num17(r.a1) << ',' << num17(r.k) << ',';
    os << (r.x_eq ? num17(*r.x_eq) : "nan") << ',';
    os << (r.discriminant ? num17(*r.discriminant) : "nan") << ',';
    os << (r.verdict_planar ? to_string(*r.verdict_planar) : "") << ',';
    os << (r.verdict_vertical ? to_string(*r.verdict_vertical) : "") << ',';
    os << (r.max_re_lambda ? num17(*r.max_re_lambda) : "nan") << ',';
    os << to_string(r.status) << "\n";
  }
}

}  // namespace robe
