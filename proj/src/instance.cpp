#include "pptrack/instance.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "pptrack/dynamics.hpp"

namespace pptrack {

std::vector<std::string> ProblemInstance::validate() const {
    std::vector<std::string> issues;
    if (rp.sign() <= 0) issues.push_back("rp must be positive");
    if (rt.sign() <= 0) issues.push_back("rt must be positive");
    if (delta.sign() <= 0) issues.push_back("delta must be positive");
    if (c < 1) issues.push_back("c must be at least 1");
    if (eta0 && !issues.empty()) return issues;
    if (eta0) {
        Rational size = eta0->length();
        if (size < rp || size > rt)
            issues.push_back("initial I-state size " + size.str() + " outside [rp, rt]");
    }
    return issues;
}

void ProblemInstance::ensure_positive() const {
    if (rp.sign() <= 0 || rt.sign() <= 0 || delta.sign() <= 0 || c < 1)
        throw std::invalid_argument("instance parameters must be positive (rp, rt, delta > 0, c >= 1)");
}

long Action::resolve(const ProblemInstance& p) const {
    long a = derived_a(p);
    long i = 0;
    switch (kind) {
        case Kind::Plus: i = a; break;
        case Kind::Minus: i = a + 1; break;
        case Kind::Split: i = parts; break;
    }
    if (i < 1 || i > p.c + 1) throw std::runtime_error("exceeds sensor capability");
    return i;
}

std::string Action::token() const {
    switch (kind) {
        case Kind::Plus: return "+";
        case Kind::Minus: return "-";
        case Kind::Split: return "s" + std::to_string(parts);
    }
    return "?";
}

Action StrategyWord::at(long k) const {
    long n = static_cast<long>(prefix.size());
    if (k < n) return prefix[static_cast<std::size_t>(k)];
    if (cycle.empty()) throw std::logic_error("strategy word with empty cycle");
    return cycle[static_cast<std::size_t>((k - n) % static_cast<long>(cycle.size()))];
}

namespace {

std::string tokens_str(const std::vector<Action>& acts) {
    std::string out;
    for (const Action& a : acts) out += a.token();
    return out;
}

std::optional<std::vector<Action>> parse_tokens(std::string_view s) {
    std::vector<Action> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (ch == '+') {
            out.push_back(Action::plus());
            ++i;
        } else if (ch == '-') {
            out.push_back(Action::minus());
            ++i;
        } else if (ch == 's') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) return std::nullopt;
            out.push_back(Action::split(std::stol(std::string(s.substr(i + 1, j - i - 1)))));
            i = j;
        } else {
            return std::nullopt;
        }
    }
    return out;
}

}  // namespace

std::string StrategyWord::str() const {
    std::string out;
    if (!prefix.empty()) out += tokens_str(prefix) + "|";
    out += "(" + tokens_str(cycle) + ")*";
    return out;
}

std::optional<StrategyWord> StrategyWord::parse(std::string_view text) {
    std::string_view s = text;
    std::vector<Action> prefix;
    if (auto bar = s.find('|'); bar != std::string_view::npos) {
        auto pre = parse_tokens(s.substr(0, bar));
        if (!pre) return std::nullopt;
        prefix = std::move(*pre);
        s.remove_prefix(bar + 1);
    }
    if (s.size() < 4 || s.front() != '(' || s.substr(s.size() - 2) != ")*") return std::nullopt;
    auto cyc = parse_tokens(s.substr(1, s.size() - 3));
    if (!cyc || cyc->empty()) return std::nullopt;
    return StrategyWord{std::move(prefix), std::move(*cyc)};
}

StrategyWord StrategyWord::parse_or_throw(std::string_view text) {
    auto w = parse(text);
    if (!w) throw std::invalid_argument("bad strategy word: '" + std::string(text) + "'");
    return *w;
}

SensingVector::SensingVector(std::vector<Rational> points) : set_points(std::move(points)) {
    if (set_points.empty()) throw std::invalid_argument("sensing vector needs at least one set-point");
    for (std::size_t i = 1; i < set_points.size(); ++i)
        if (!(set_points[i - 1] < set_points[i]))
            throw std::invalid_argument("sensing vector set-points must be strictly increasing");
}

}  // namespace pptrack
