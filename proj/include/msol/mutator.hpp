#pragma once

#include "msol/scheduler.hpp"
#include "msol/vm.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace msol {

// mt19937_64 behind draw helpers that avoid std::uniform_int_distribution,
// whose output is implementation-defined; reports must be byte-identical
// across toolchains.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    uint64_t below(uint64_t n) { return n == 0 ? 0 : engine_() % n; }
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool coin() { return (engine_() & 1) != 0; }

  private:
    std::mt19937_64 engine_;
};

// Mutation value dictionary: boundary constants plus small walks around the
// previous value.
uint64_t dict_uint(Rng& rng, uint64_t previous);
int dict_address(Rng& rng);

struct MutationContext {
    const Program* prog = nullptr;
    std::vector<int> public_fns;
    // When nonempty, insertions extend a matched prefix of a suggested
    // sequence half the time (seq producer enabled).
    std::vector<ResolvedSuggestion> suggestions;
};

// Applies exactly one operator: insert a call (p=0.3), remove one (p=0.2),
// replace one call's function (p=0.2), or mutate one call's
// arguments/sender/value (p=0.3). Operators invalid at the current length
// are redrawn. The result length stays within [1, 32].
TestCase mutate(const TestCase& t, Rng& rng, const MutationContext& ctx);

// One single-call test case per public function, dictionary-default
// arguments. Throws std::invalid_argument when no public function exists.
std::vector<TestCase> seed_corpus(const Program& prog);

}  // namespace msol
