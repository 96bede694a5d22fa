#include "msol/mutator.hpp"

#include <stdexcept>

namespace msol {

uint64_t dict_uint(Rng& rng, uint64_t previous) {
    switch (rng.below(8)) {
        case 0: return 0;
        case 1: return 1;
        case 2: return 2;
        case 3: return 100;
        case 4: return uint64_t{1} << 32;
        case 5: return ~uint64_t{0};
        case 6: {
            uint64_t delta = 1 + rng.below(16);
            return previous > ~uint64_t{0} - delta ? ~uint64_t{0} : previous + delta;
        }
        default: {
            uint64_t delta = 1 + rng.below(16);
            return previous < delta ? 0 : previous - delta;
        }
    }
}

int dict_address(Rng& rng) { return static_cast<int>(rng.below(Program::kAddressPool)); }

namespace {

Value fresh_value(Rng& rng, Type type, uint64_t previous) {
    switch (type) {
        case Type::Uint: return Value::uint_v(dict_uint(rng, previous));
        case Type::Bool: return Value::bool_v(rng.coin());
        case Type::Address: return Value::addr_v(dict_address(rng));
        case Type::Map: break;
    }
    throw std::logic_error("map-typed call argument");
}

Call fresh_call(Rng& rng, const Program& prog, int fn) {
    Call c;
    c.function = fn;
    for (const Param& p : prog.function(fn).decl->params)
        c.args.push_back(fresh_value(rng, p.type, 0));
    c.sender = dict_address(rng);
    c.value = dict_uint(rng, 0);
    return c;
}

// Longest prefix of `wanted` embedded as an ordered subsequence of `have`
// (earliest match); returns its length and the index of the last matched
// call, -1 when nothing matched.
std::pair<size_t, int> match_prefix(const std::vector<int>& wanted,
                                    const std::vector<int>& have) {
    size_t matched = 0;
    int last_pos = -1;
    for (size_t i = 0; i < have.size() && matched < wanted.size(); ++i) {
        if (have[i] == wanted[matched]) {
            ++matched;
            last_pos = static_cast<int>(i);
        }
    }
    return {matched, last_pos};
}

std::vector<int> call_functions(const TestCase& t) {
    std::vector<int> out;
    out.reserve(t.calls.size());
    for (const Call& c : t.calls) out.push_back(c.function);
    return out;
}

void insert_call(TestCase& t, Rng& rng, const MutationContext& ctx) {
    int fn = -1;
    size_t position = 0;
    bool positioned = false;
    if (!ctx.suggestions.empty() && rng.unit() < 0.5) {
        const ResolvedSuggestion& s = ctx.suggestions[rng.below(ctx.suggestions.size())];
        auto [matched, last_pos] = match_prefix(s.functions, call_functions(t));
        if (matched < s.functions.size()) {
            fn = s.functions[matched];
            // Anywhere after the matched prefix keeps the chain in order.
            size_t lo = static_cast<size_t>(last_pos + 1);
            position = lo + rng.below(t.calls.size() - lo + 1);
            positioned = true;
        }
    }
    if (fn < 0) fn = ctx.public_fns[rng.below(ctx.public_fns.size())];
    if (!positioned) position = rng.below(t.calls.size() + 1);
    t.calls.insert(t.calls.begin() + static_cast<long>(position), fresh_call(rng, *ctx.prog, fn));
}

void mutate_fields(TestCase& t, Rng& rng, const Program& prog) {
    Call& c = t.calls[rng.below(t.calls.size())];
    size_t fields = c.args.size() + 2;  // args, sender, value
    size_t pick = rng.below(fields);
    if (pick < c.args.size()) {
        Type type = prog.function(c.function).decl->params[pick].type;
        c.args[pick] = fresh_value(rng, type, c.args[pick].raw);
    } else if (pick == c.args.size()) {
        c.sender = dict_address(rng);
    } else {
        c.value = dict_uint(rng, c.value);
    }
}

}  // namespace

TestCase mutate(const TestCase& t, Rng& rng, const MutationContext& ctx) {
    TestCase out = t;
    while (true) {
        double roll = rng.unit();
        if (roll < 0.3) {
            if (out.calls.size() >= kMaxTestCaseLen) continue;  // redraw
            insert_call(out, rng, ctx);
            return out;
        }
        if (roll < 0.5) {
            if (out.calls.size() <= 1) continue;  // redraw, length floor
            out.calls.erase(out.calls.begin() + static_cast<long>(rng.below(out.calls.size())));
            return out;
        }
        if (roll < 0.7) {
            Call& victim = out.calls[rng.below(out.calls.size())];
            Call replacement =
                fresh_call(rng, *ctx.prog, ctx.public_fns[rng.below(ctx.public_fns.size())]);
            replacement.sender = victim.sender;
            replacement.value = victim.value;
            victim = std::move(replacement);
            return out;
        }
        mutate_fields(out, rng, *ctx.prog);
        return out;
    }
}

std::vector<TestCase> seed_corpus(const Program& prog) {
    std::vector<int> fns = prog.public_functions();
    if (fns.empty()) throw std::invalid_argument("no public functions to seed from");
    std::vector<TestCase> seeds;
    for (int fn : fns) {
        Call c;
        c.function = fn;
        for (const Param& p : prog.function(fn).decl->params) {
            switch (p.type) {
                case Type::Uint: c.args.push_back(Value::uint_v(0)); break;
                case Type::Bool: c.args.push_back(Value::bool_v(false)); break;
                case Type::Address: c.args.push_back(Value::addr_v(0)); break;
                case Type::Map: throw std::logic_error("map-typed parameter");
            }
        }
        c.sender = 0;
        c.value = 0;
        seeds.push_back(TestCase{{c}});
    }
    return seeds;
}

}  // namespace msol
