#include "tbsg/io.hpp"

#include "tbsg/solve.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace tbsg {

namespace {

// One content line split into tokens, with its 1-based line number.
struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

double parse_float(const Line& line, const std::string& tok) {
    size_t pos = 0;
    double x;
    try {
        x = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected a number, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line.number, "trailing characters in number '" + tok + "'");
    return x;
}

int parse_int(const Line& line, const std::string& tok) {
    size_t pos = 0;
    long x;
    try {
        x = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line.number, "trailing characters in integer '" + tok + "'");
    return (int)x;
}

void expect_key(const Line& line, size_t idx, const std::string& key) {
    if (idx >= line.tokens.size() || line.tokens[idx] != key)
        throw ParseError(line.number, "expected '" + key + "'");
}

}  // namespace

Game parse_game(std::istream& in) {
    const auto lines = tokenize(in);
    size_t i = 0;
    auto next = [&]() -> const Line& {
        if (i >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, "unexpected end of file");
        return lines[i++];
    };

    {
        const Line& l = next();
        if (l.tokens.size() != 2 || l.tokens[0] != "tbsg" || l.tokens[1] != "1")
            throw ParseError(l.number, "expected header 'tbsg 1'");
    }

    Game g;
    {
        const Line& l = next();
        expect_key(l, 0, "states");
        if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'states <l>'");
        g.num_states = parse_int(l, l.tokens[1]);
        if (g.num_states <= 0) throw ParseError(l.number, "states must be positive");
    }
    {
        const Line& l = next();
        expect_key(l, 0, "actions");
        if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'actions <m>'");
        g.num_actions = parse_int(l, l.tokens[1]);
        if (g.num_actions <= 0) throw ParseError(l.number, "actions must be positive");
    }
    {
        const Line& l = next();
        expect_key(l, 0, "gamma");
        if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'gamma <float>'");
        g.gamma = parse_float(l, l.tokens[1]);
        if (!(g.gamma > 0.0 && g.gamma < 1.0)) throw ParseError(l.number, "gamma must lie in (0, 1)");
    }
    {
        const Line& l = next();
        expect_key(l, 0, "owners");
        if ((int)l.tokens.size() != g.num_states + 1)
            throw ParseError(l.number, "expected " + std::to_string(g.num_states) + " owner tags");
        for (int s = 0; s < g.num_states; ++s) {
            const int tag = parse_int(l, l.tokens[s + 1]);
            if (tag != 1 && tag != 2) throw ParseError(l.number, "owner tag must be 1 or 2");
            g.owner.push_back(tag == 1 ? Player::One : Player::Two);
        }
    }

    g.action_state.assign(g.num_actions, -1);
    g.transition = Eigen::MatrixXd::Zero(g.num_actions, g.num_states);
    g.reward = Eigen::VectorXd::Zero(g.num_actions);
    std::vector<bool> seen(g.num_actions, false);

    for (int k = 0; k < g.num_actions; ++k) {
        const Line& l = next();
        expect_key(l, 0, "action");
        if (l.tokens.size() < 8) throw ParseError(l.number, "truncated action line");
        const int id = parse_int(l, l.tokens[1]);
        if (id < 0 || id >= g.num_actions) throw ParseError(l.number, "action id out of range");
        if (seen[id]) throw ParseError(l.number, "duplicate action id " + std::to_string(id));
        seen[id] = true;
        expect_key(l, 2, "state");
        const int sid = parse_int(l, l.tokens[3]);
        if (sid < 0 || sid >= g.num_states) throw ParseError(l.number, "state id out of range");
        expect_key(l, 4, "reward");
        g.action_state[id] = sid;
        g.reward(id) = parse_float(l, l.tokens[5]);
        expect_key(l, 6, "next");
        double sum = 0.0;
        for (size_t t = 7; t < l.tokens.size(); ++t) {
            const auto& tok = l.tokens[t];
            const auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw ParseError(l.number, "expected <state>:<prob>, got '" + tok + "'");
            const int dst = parse_int(l, tok.substr(0, colon));
            const double p = parse_float(l, tok.substr(colon + 1));
            if (dst < 0 || dst >= g.num_states) throw ParseError(l.number, "next state id out of range");
            if (p < 0.0) throw ParseError(l.number, "negative transition probability");
            g.transition(id, dst) += p;
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ParseError(l.number, "transition probabilities sum to " + format_double(sum));
    }
    if (i < lines.size()) throw ParseError(lines[i].number, "unexpected content after last action");

    g.rebuild_index();
    for (int s = 0; s < g.num_states; ++s)
        if (g.actions_by_state[s].empty())
            throw ParseError(lines.back().number, "state " + std::to_string(s) + " has no actions");
    return g;
}

Game parse_game_string(const std::string& text) {
    std::istringstream in(text);
    return parse_game(in);
}

Game load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_game(in);
}

std::string serialize_game(const Game& g) {
    std::ostringstream out;
    out << "tbsg 1\n";
    out << "states " << g.num_states << "\n";
    out << "actions " << g.num_actions << "\n";
    out << "gamma " << format_double(g.gamma) << "\n";
    out << "owners";
    for (Player p : g.owner) out << ' ' << (p == Player::One ? 1 : 2);
    out << "\n";
    for (int a = 0; a < g.num_actions; ++a) {
        out << "action " << a << " state " << g.action_state[a] << " reward "
            << format_double(g.reward(a)) << " next";
        for (int s = 0; s < g.num_states; ++s)
            if (g.transition(a, s) != 0.0)
                out << ' ' << s << ':' << format_double(g.transition(a, s));
        out << "\n";
    }
    return out.str();
}

void save_game(const Game& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_game(g);
}

}  // namespace tbsg
