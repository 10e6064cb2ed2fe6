#include "gainspec/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace gainspec {

namespace {

constexpr double kParseUnitTol = 1e-6;

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

double parse_double(const std::string& text, int line) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw ParseError(line, "malformed number '" + text + "'");
    }
    if (consumed != text.size()) throw ParseError(line, "malformed number '" + text + "'");
    return value;
}

long parse_long(const std::string& text, int line) {
    std::size_t consumed = 0;
    long value = 0;
    try {
        value = std::stol(text, &consumed);
    } catch (const std::exception&) {
        throw ParseError(line, "malformed integer '" + text + "'");
    }
    if (consumed != text.size()) throw ParseError(line, "malformed integer '" + text + "'");
    return value;
}

UnitGain parse_gain(const std::string& token, int line) {
    if (token.rfind("pi:", 0) == 0) {
        const std::string fraction = token.substr(3);
        const auto slash = fraction.find('/');
        if (slash == std::string::npos) {
            throw ParseError(line, "expected pi:p/q, got '" + token + "'");
        }
        const long p = parse_long(fraction.substr(0, slash), line);
        const long q = parse_long(fraction.substr(slash + 1), line);
        if (q == 0) throw ParseError(line, "zero denominator in '" + token + "'");
        return UnitGain::from_pi_fraction(p, q);
    }
    if (token.empty() || token.back() != 'i') {
        throw ParseError(line, "unrecognized gain '" + token + "'");
    }
    const std::string body = token.substr(0, token.size() - 1);
    // Split <re><sign><im> at the last sign that does not follow an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < body.size(); ++k) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
        }
    }
    if (split == std::string::npos) {
        throw ParseError(line, "expected <re>+<im>i or <re>-<im>i, got '" + token + "'");
    }
    const double re = parse_double(body.substr(0, split), line);
    const double im = parse_double(body.substr(split), line);
    try {
        return UnitGain::normalized(Complex(re, im), kParseUnitTol);
    } catch (const Error&) {
        throw ParseError(line, "gain '" + token + "' is not a unit complex number");
    }
}

std::string format_double(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

std::string format_gain(UnitGain g) {
    const double im = g.im();
    std::string out = format_double(g.re());
    out += (std::signbit(im) ? "-" : "+");
    out += format_double(std::abs(im));
    out += "i";
    return out;
}

}  // namespace

ParsedGraph parse_gain_graph(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    int n = -1;
    struct RawEdge {
        int u, v;
        UnitGain gain;
        double weight;
    };
    std::vector<RawEdge> raw_edges;
    bool any_weight = false;

    while (std::getline(stream, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        const auto tokens = tokenize(raw);
        if (tokens.empty()) continue;

        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "gaingraph") {
                throw ParseError(line_no, "expected header 'gaingraph <n>'");
            }
            const long count = parse_long(tokens[1], line_no);
            if (count < 1) throw ParseError(line_no, "vertex count must be at least 1");
            n = static_cast<int>(count);
            continue;
        }

        if (tokens.size() < 3 || tokens.size() > 4) {
            throw ParseError(line_no, "expected '<u> <v> <gain> [w=<weight>]'");
        }
        const long u = parse_long(tokens[0], line_no);
        const long v = parse_long(tokens[1], line_no);
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
        }
        if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
        const UnitGain gain = parse_gain(tokens[2], line_no);
        double weight = 1.0;
        if (tokens.size() == 4) {
            if (tokens[3].rfind("w=", 0) != 0) {
                throw ParseError(line_no, "expected w=<weight>, got '" + tokens[3] + "'");
            }
            weight = parse_double(tokens[3].substr(2), line_no);
            if (!(weight > 0.0)) throw ParseError(line_no, "weight must be positive");
            any_weight = true;
        }
        for (const auto& e : raw_edges) {
            const int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                              std::to_string(v));
            }
        }
        raw_edges.push_back(
            {static_cast<int>(u) - 1, static_cast<int>(v) - 1, gain, weight});
    }
    if (n < 0) throw ParseError(line_no, "missing 'gaingraph <n>' header");

    // GainGraph canonicalizes and sorts; replay that here so the weights
    // stay aligned with graph.edges().
    for (auto& e : raw_edges) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            e.gain = e.gain.conj();
        }
    }
    std::sort(raw_edges.begin(), raw_edges.end(), [](const RawEdge& a, const RawEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::vector<GainEdge> edges;
    std::vector<double> weights;
    for (const auto& e : raw_edges) {
        edges.push_back(GainEdge{e.u, e.v, e.gain});
        weights.push_back(e.weight);
    }
    return ParsedGraph{GainGraph(n, std::move(edges)), std::move(weights), any_weight};
}

std::string serialize(const GainGraph& g) {
    std::string out = "gaingraph " + std::to_string(g.order()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
               format_gain(e.gain) + "\n";
    }
    return out;
}

std::string serialize(const WeightedGainGraph& wg) {
    std::string out = "gaingraph " + std::to_string(wg.base().order()) + "\n";
    const auto edges = wg.base().edges();
    for (int idx = 0; idx < static_cast<int>(edges.size()); ++idx) {
        const auto& e = edges[static_cast<std::size_t>(idx)];
        out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
               format_gain(e.gain) + " w=" +
               format_double(wg.weights()[static_cast<std::size_t>(idx)]) + "\n";
    }
    return out;
}

}  // namespace gainspec
