#include "gamma_euler/spec_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "gamma_euler/errors.hpp"

namespace gamma_euler {

namespace {

int parse_positive_int(const std::string& s, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
        throw ParseError(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

GammaGroup parse_gamma_spec(const std::string& text) {
    if (text == "Z") return GammaGroup::z_pow(1);
    if (text.rfind("Z^", 0) == 0)
        return GammaGroup::z_pow(parse_positive_int(text.substr(2), "Z^ rank"));
    if (!text.empty() && text[0] == 'F' && text.rfind("fp:", 0) != 0)
        return GammaGroup::free_group(
            parse_positive_int(text.substr(1), "F rank"));

    if (text.rfind("fp:", 0) != 0)
        throw ParseError("unrecognized gamma spec: '" + text + "'");

    const std::string body = text.substr(3);
    const size_t bar = body.find('|');
    const std::string gens_part =
        bar == std::string::npos ? body : body.substr(0, bar);
    const std::string rel_part =
        bar == std::string::npos ? std::string{} : body.substr(bar + 1);

    Presentation p;
    std::vector<int> letter_index(26, 0);
    for (const std::string& g : split(gens_part, ',')) {
        if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
            throw ParseError("generator must be a single lowercase letter: '" +
                             g + "'");
        int& slot = letter_index[g[0] - 'a'];
        if (slot != 0) throw ParseError("duplicate generator '" + g + "'");
        slot = ++p.generator_count;
    }
    if (p.generator_count == 0) throw ParseError("fp: needs generators");

    if (!rel_part.empty()) {
        for (const std::string& word : split(rel_part, ',')) {
            std::vector<int> rel;
            for (char c : word) {
                const bool upper = std::isupper(static_cast<unsigned char>(c));
                const char base =
                    upper ? static_cast<char>(std::tolower(c)) : c;
                if (!std::islower(static_cast<unsigned char>(base)))
                    throw ParseError(std::string("bad relator letter '") + c +
                                     "'");
                const int idx = letter_index[base - 'a'];
                if (idx == 0)
                    throw ParseError(std::string("relator uses unknown "
                                                 "generator '") +
                                     base + "'");
                rel.push_back(upper ? -idx : idx);
            }
            p.relators.push_back(std::move(rel));
        }
    }
    return GammaGroup::presented(std::move(p));
}

std::string print_gamma_spec(const GammaGroup& gamma) {
    switch (gamma.kind()) {
        case GammaGroup::Kind::ZPow:
            return gamma.generator_count() == 1
                       ? "Z"
                       : "Z^" + std::to_string(gamma.generator_count());
        case GammaGroup::Kind::Free:
            return "F" + std::to_string(gamma.generator_count());
        case GammaGroup::Kind::Presented:
            break;
    }
    const Presentation& p = gamma.presentation();
    if (p.generator_count > 26)
        throw ParseError("gamma spec grammar is limited to 26 generators");
    std::string out = "fp:";
    for (int i = 0; i < p.generator_count; ++i) {
        if (i) out += ",";
        out += static_cast<char>('a' + i);
    }
    if (!p.relators.empty()) {
        out += "|";
        for (size_t r = 0; r < p.relators.size(); ++r) {
            if (r) out += ",";
            for (int idx : p.relators[r])
                out += static_cast<char>((idx > 0 ? 'a' : 'A') +
                                         std::abs(idx) - 1);
        }
    }
    return out;
}

}  // namespace gamma_euler
