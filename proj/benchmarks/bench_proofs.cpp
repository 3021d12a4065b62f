#include <benchmark/benchmark.h>

#include "hflab/proofs.hpp"

using namespace hflab;

namespace {

Formula fs(const std::string& text) { return parse_formula(text, Sig::Set); }

ProofTree mp_tree(const Formula& psi, const Formula& chi) {
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  Formula not_p2 = Formula::lnot(premise2);
  Formula nn_psi = Formula::lnot(Formula::lnot(psi));
  ProofTree use_p2 = ProofTree::assumption(Sequent({chi, premise2}), premise2);
  ProofTree use_psi = ProofTree::assumption(Sequent({chi, psi}), psi);
  ProofTree left = ProofTree::not_not(Sequent({chi, nn_psi}), nn_psi, use_psi);
  ProofTree right = ProofTree::ax(Sequent({chi, Formula::lnot(chi)}));
  ProofTree split = ProofTree::and_split(Sequent({chi, not_p2}), not_p2, left, right);
  return ProofTree::cut(Sequent({chi}), premise2, use_p2, split);
}

}  // namespace

static void BM_CheckProof(benchmark::State& state) {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  ProofTree mp = mp_tree(psi, chi);
  std::vector<Formula> phi = {psi, premise2};
  for (auto _ : state) benchmark::DoNotOptimize(check_proof(mp, phi, chi));
}
BENCHMARK(BM_CheckProof);

static void BM_EliminateCuts(benchmark::State& state) {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  ProofTree mp = mp_tree(psi, chi);
  ProofTree stacked = ProofTree::cut(Sequent({chi}), Formula::lor(psi, chi), mp, mp);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_cuts(stacked));
}
BENCHMARK(BM_EliminateCuts);

static void BM_BoundedSearchHit(benchmark::State& state) {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  std::vector<Formula> phi = {psi, premise2};
  for (auto _ : state) benchmark::DoNotOptimize(bounded_search(phi, chi, 10));
}
BENCHMARK(BM_BoundedSearchHit);

static void BM_BoundedSearchMiss(benchmark::State& state) {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula goal = fs("(in (c 3) (c 0))");
  std::vector<Formula> phi = {psi};
  for (auto _ : state) benchmark::DoNotOptimize(bounded_search(phi, goal, state.range(0)));
}
BENCHMARK(BM_BoundedSearchMiss)->Arg(8)->Arg(14);

static void BM_Supexp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(supexp(5));
}
BENCHMARK(BM_Supexp);
