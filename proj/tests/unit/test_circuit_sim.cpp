#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "multiswap/circuit.hpp"
#include "multiswap/errors.hpp"
#include "multiswap/multiswap.hpp"
#include "multiswap/rng.hpp"
#include "multiswap/san.hpp"
#include "multiswap/simulator.hpp"
#include "multiswap/swap_test.hpp"
#include "reference_sim.hpp"

using namespace multiswap;

namespace {

Circuit data_circuit(std::size_t n) { return Circuit(std::vector<QubitRole>(n, QubitRole::Data)); }

Gate random_gate(std::mt19937_64& rng, std::size_t n) {
  std::vector<Qubit> q(n);
  std::iota(q.begin(), q.end(), Qubit{0});
  std::shuffle(q.begin(), q.end(), rng);
  switch (rng() % 7) {
    case 0: return Gate::h(q[0]);
    case 1: return Gate::x(q[0]);
    case 2: return Gate::z(q[0]);
    case 3: return Gate::cnot(q[0], q[1]);
    case 4: return Gate::swap(q[0], q[1]);
    case 5: return Gate::ccz(q[0], q[1], q[2]);
    default: return Gate::cswap(q[0], q[1], q[2]);
  }
}

}  // namespace

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("shot streams are reproducible and distinct") {
  ShotStream a(42, 7), b(42, 7), c(42, 8);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  ShotStream u(1, 0);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("gate validation") {
  auto c = data_circuit(3);
  CHECK_THROWS_AS(c.add(Gate::h(3)), std::invalid_argument);
  CHECK_THROWS_AS(c.add(Gate::cnot(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(c.add(Gate::cswap(0, 2, 2)), std::invalid_argument);
  CHECK_NOTHROW(c.add(Gate::cswap(0, 1, 2)));
  c.measure(0, "a");
  CHECK_THROWS_AS(c.measure(0, "b"), std::invalid_argument);
  CHECK_THROWS_AS(c.measure(1, "a"), std::invalid_argument);
  CHECK(gate_arity(GateKind::CSWAP) == 3);
  CHECK(gate_arity(GateKind::CNOT) == 2);
}

TEST_CASE("single gates") {
  auto c = data_circuit(1);
  c.add(Gate::h(0));
  const auto out = run_statevector(c, PureState::basis(1));
  CHECK(out[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(out[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  const PureState psi({0.6, 0.8});
  const PureState phi({Amplitude(0.0, 1.0), 0.0});
  auto cs = data_circuit(3);
  cs.add(Gate::cswap(0, 1, 2));
  const auto off = run_statevector(cs, tensor_product(std::vector{PureState::basis(1, 0), psi, phi}));
  const auto want_off = tensor_product(std::vector{PureState::basis(1, 0), psi, phi});
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(off[i] - want_off[i]) < 1e-15);
  const auto on = run_statevector(cs, tensor_product(std::vector{PureState::basis(1, 1), phi, psi}));
  const auto want_on = tensor_product(std::vector{PureState::basis(1, 1), psi, phi});
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(on[i] - want_on[i]) < 1e-15);
}

TEST_CASE("kernel agrees with the reference simulator on random circuits") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 4;
    auto c = data_circuit(n);
    for (int g = 0; g < 25; ++g) c.add(random_gate(rng, n));
    const auto in = refsim::random_state(rng, n);
    const auto got = run_statevector(c, in);
    const auto want = refsim::run(c, refsim::to_vec(in));
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
    CHECK(std::abs(got.norm_squared() - 1.0) < 1e-10);
  }
}

TEST_CASE("every gate is an involution") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 70; ++trial) {
    auto c = data_circuit(4);
    const auto g = random_gate(rng, 4);
    c.add(g);
    c.add(g);
    const auto in = refsim::random_state(rng, 4);
    const auto out = run_statevector(c, in);
    for (std::size_t i = 0; i < in.dim(); ++i) CHECK(std::abs(out[i] - in[i]) < 1e-12);
  }
}

TEST_CASE("measure_probabilities") {
  auto c = data_circuit(2);
  CHECK_THROWS_AS(measure_probabilities(c, PureState::basis(2)), DataError);
  c.add(Gate::h(0));
  c.add(Gate::cnot(0, 1));
  c.measure(1, "second");
  c.measure(0, "first");
  const auto p = measure_probabilities(c, PureState::basis(2));
  REQUIRE(p.size() == 2);
  CHECK(p.at("00") == doctest::Approx(0.5));
  CHECK(p.at("11") == doctest::Approx(0.5));

  auto x = data_circuit(2);
  x.add(Gate::x(1));
  x.measure(1, "b");
  x.measure(0, "a");
  CHECK(measure_probabilities(x, PureState::basis(2)).at("10") == doctest::Approx(1.0));
  CHECK_THROWS_AS(run_statevector(x, PureState::basis(3)), DataError);
}

TEST_CASE("swap test probabilities through the simulator") {
  const auto test = build_swap_test(SwapTestVariant::Standard, 1);
  const PureState p1({0.0864, 0.9963});
  const PureState p2({0.8391, 0.5440});
  const auto same = measure_probabilities(test.circuit, swap_test_input(test, p1, p1));
  CHECK(same.at("0") == doctest::Approx(1.0));
  const auto diff = measure_probabilities(test.circuit, swap_test_input(test, p1, p2));
  CHECK(std::abs(diff.at("0") - 0.6887) < 5e-4);
  const auto orth = measure_probabilities(
      test.circuit, swap_test_input(test, PureState::basis(1, 0), PureState::basis(1, 1)));
  CHECK(orth.at("0") == doctest::Approx(0.5));
}

TEST_CASE("sampling frequencies, determinism and worker independence") {
  auto c = data_circuit(1);
  c.add(Gate::h(0));
  c.measure(0, "m");
  const std::uint64_t shots = 1'000'000;
  const auto s = sample_shots(c, PureState::basis(1), shots, 2024);
  const auto zeros = std::count(s.outcomes.begin(), s.outcomes.end(), 0u);
  const double f = static_cast<double>(zeros) / static_cast<double>(shots);
  CHECK(f > 0.497);
  CHECK(f < 0.503);

  const auto again = sample_shots(c, PureState::basis(1), 10000, 77, kDefaultQubitCap, 1);
  const auto threaded = sample_shots(c, PureState::basis(1), 10000, 77, kDefaultQubitCap, 4);
  CHECK(again.outcomes == threaded.outcomes);
  CHECK(again.outcomes == sample_shots(c, PureState::basis(1), 10000, 77).outcomes);
  CHECK(again.outcomes != sample_shots(c, PureState::basis(1), 10000, 78).outcomes);

  auto det = data_circuit(2);
  det.add(Gate::x(0));
  det.measure(0, "a");
  det.measure(1, "b");
  const auto d = sample_shots(det, PureState::basis(2), 500, 1);
  CHECK(d.labels.size() == 2);
  CHECK(std::all_of(d.outcomes.begin(), d.outcomes.end(), [](auto o) { return o == 2u; }));
  CHECK(d.bitstring(0) == "10");

  CHECK_THROWS_AS(sample_shots(c, PureState::basis(1), 0, 1), ConfigError);
}

TEST_CASE("sampling converges at the binomial rate on a skewed distribution") {
  MeasuredDistribution dist{{"a", "b"}, {0.1, 0.0, 0.6, 0.3}};
  const std::uint64_t shots = 200000;
  const auto s = sample_distribution(dist, shots, 5);
  std::array<double, 4> freq{};
  for (const auto o : s.outcomes) freq[o] += 1.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double p = dist.probabilities[i];
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(shots));
    CHECK(std::abs(freq[i] / static_cast<double>(shots) - p) <= 3 * sigma + 1e-12);
  }
  CHECK(freq[1] == 0.0);
}

TEST_CASE("statevector cap is enforced with an actionable message") {
  auto c = data_circuit(4);
  CHECK_THROWS_WITH_AS(run_statevector(c, PureState::basis(4), 3), doctest::Contains("oracle"),
                       ConfigError);
}

TEST_CASE("resource counting") {
  CHECK(count_resources(Circuit{}) == ResourceProfile{});
  const auto u8 = build_un(8, 1);
  const auto r = count_resources(u8.network);
  CHECK(r.cswap_count == 8);
  CHECK(r.ancilla_count == 4);
  CHECK(r.cswap_count <= r.gate_count_total);
  const auto san = count_resources(build_san_un(8).network);
  CHECK(san.cswap_count == 9);
  CHECK(san.ancilla_count == 6);
}
