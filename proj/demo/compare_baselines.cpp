// Small comparison grid printed as Markdown, with the per-run CSV alongside.

#include <iostream>

#include "gbo/gbo.hpp"

int main() {
  gbo::harness::ExperimentSpec spec;
  spec.functions = {"f1", "f5", "f9"};
  spec.algorithms = {"gbo", "pso", "de", "ga", "sa"};
  spec.repeats = 3;
  spec.seed_base = 7;

  const auto table = gbo::harness::run_experiment(spec);
  std::cout << gbo::harness::emit(table, gbo::harness::Format::kMarkdown) << '\n'
            << gbo::harness::emit(table, gbo::harness::Format::kCsv);
}
