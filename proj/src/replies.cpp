#include "msol/replies.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

namespace msol {

namespace {

struct IntToken {
    long long value;
    size_t begin;
    size_t end;
};

std::vector<IntToken> integer_tokens(const std::string& text) {
    std::vector<IntToken> out;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            bool negative = start > 0 && text[start - 1] == '-';
            long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                if (v < 1000000) v = v * 10 + (text[i] - '0');
                ++i;
            }
            out.push_back({negative ? -v : v, negative ? start - 1 : start, i});
        } else {
            ++i;
        }
    }
    return out;
}

// True when the gap between two integer tokens is exactly one comma plus
// optional whitespace.
bool comma_separated(const std::string& text, size_t from, size_t to) {
    bool seen_comma = false;
    for (size_t i = from; i < to; ++i) {
        char c = text[i];
        if (c == ',') {
            if (seen_comma) return false;
            seen_comma = true;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return seen_comma;
}

int clamp_score(long long v, const std::string& what, std::vector<std::string>* warnings) {
    if (v < 0 || v > 100) {
        if (warnings)
            warnings->push_back(what + ": clamped out-of-range score " + std::to_string(v) +
                                " into [0,100]");
        return static_cast<int>(std::clamp<long long>(v, 0, 100));
    }
    return static_cast<int>(v);
}

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<int> parse_scores(const std::string& text, int expected_n,
                              std::vector<std::string>* warnings) {
    if (expected_n < 1) throw std::invalid_argument("expected_n must be >= 1");
    std::vector<IntToken> tokens = integer_tokens(text);
    size_t n = static_cast<size_t>(expected_n);
    // Split tokens into maximal comma-separated runs, take the first run long
    // enough.
    size_t run_start = 0;
    while (run_start < tokens.size()) {
        size_t run_end = run_start + 1;
        while (run_end < tokens.size() &&
               comma_separated(text, tokens[run_end - 1].end, tokens[run_end].begin))
            ++run_end;
        if (run_end - run_start >= n) {
            std::vector<int> out;
            out.reserve(n);
            for (size_t i = run_start; i < run_start + n; ++i)
                out.push_back(clamp_score(tokens[i].value, "score " + std::to_string(i - run_start + 1),
                                          warnings));
            return out;
        }
        run_start = run_end;
    }
    throw MalformedResponse("no run of " + std::to_string(expected_n) +
                            " comma-separated integers found in reply");
}

std::vector<SequenceSuggestion> parse_sequences(const std::string& text, const Program& prog,
                                                std::vector<std::string>* warnings) {
    std::vector<SequenceSuggestion> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line = trim(line);
        if (line.empty()) continue;
        size_t colon = line.rfind(':');
        if (colon == std::string::npos) continue;
        std::string chain = line.substr(0, colon);
        std::string score_text = trim(line.substr(colon + 1));
        if (chain.find("=>") == std::string::npos) continue;
        char* end = nullptr;
        long long score = std::strtoll(score_text.c_str(), &end, 10);
        if (end == score_text.c_str()) continue;

        SequenceSuggestion s;
        bool ok = true;
        size_t pos = 0;
        while (pos <= chain.size()) {
            size_t arrow = chain.find("=>", pos);
            std::string part =
                trim(arrow == std::string::npos ? chain.substr(pos) : chain.substr(pos, arrow - pos));
            int fn = prog.resolve_signature_loose(part);
            if (part.empty() || fn < 0) {
                if (warnings)
                    warnings->push_back("dropped sequence line with unknown signature '" + part +
                                        "'");
                ok = false;
                break;
            }
            s.signatures.push_back(prog.function(fn).signature);
            if (arrow == std::string::npos) break;
            pos = arrow + 2;
        }
        if (!ok || s.signatures.size() < 2) continue;
        s.score = clamp_score(score, "sequence score", warnings);
        out.push_back(std::move(s));
    }
    if (out.empty()) throw MalformedResponse("no sequence lines parsed from reply");
    return out;
}

std::vector<double> aggregate_scores(const std::vector<std::vector<int>>& replies) {
    if (replies.empty()) throw std::invalid_argument("no replies to aggregate");
    size_t n = replies.front().size();
    for (const auto& r : replies)
        if (r.size() != n) throw std::invalid_argument("reply score lists differ in length");
    std::vector<double> out(n, 0.0);
    for (const auto& r : replies)
        for (size_t i = 0; i < n; ++i) out[i] += r[i];
    for (double& v : out) v /= static_cast<double>(replies.size());
    return out;
}

std::vector<SequenceSuggestion> aggregate_sequences(
    const std::vector<std::vector<SequenceSuggestion>>& replies) {
    std::vector<std::vector<std::string>> order;
    std::map<std::vector<std::string>, std::pair<double, int>> sums;
    for (const auto& reply : replies) {
        for (const auto& s : reply) {
            auto [it, inserted] = sums.try_emplace(s.signatures, std::make_pair(0.0, 0));
            if (inserted) order.push_back(s.signatures);
            it->second.first += s.score;
            it->second.second += 1;
        }
    }
    std::vector<SequenceSuggestion> out;
    for (const auto& chain : order) {
        const auto& [sum, count] = sums.at(chain);
        out.push_back({chain, sum / count});
    }
    return out;
}

}  // namespace msol
