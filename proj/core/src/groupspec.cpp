#include "hermcert/groupspec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hermcert {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(what + ": '" + token + "' is not an integer");
        }
    }
    if (out.empty()) fail(what + ": empty list");
    return out;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

ParsedGroup load_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cayley file '" + path + "' cannot be opened");
    std::string line;
    int lineno = 0;
    int size = -1;
    std::vector<std::vector<int>> table;
    bool in_table = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        auto where = [&] { return path + " line " + std::to_string(lineno); };
        if (!in_table) {
            if (toks[0] == "kind") {
                if (toks.size() != 2 || toks[1] != "cayley")
                    fail(where() + ": kind must be 'cayley'");
            } else if (toks[0] == "size") {
                if (toks.size() != 2) fail(where() + ": size needs one integer");
                size = std::stoi(toks[1]);
            } else if (toks[0] == "table") {
                if (size <= 0) fail(where() + ": size must come before table");
                in_table = true;
            } else {
                fail(where() + ": unknown field '" + toks[0] + "'");
            }
        } else {
            if (static_cast<int>(toks.size()) != size)
                fail(where() + ": table row has " + std::to_string(toks.size()) +
                     " entries, expected " + std::to_string(size));
            std::vector<int> row;
            for (const auto& t : toks) {
                try {
                    row.push_back(std::stoi(t));
                } catch (const std::exception&) {
                    fail(where() + ": table entry '" + t + "' is not an integer");
                }
            }
            table.push_back(std::move(row));
        }
    }
    if (static_cast<int>(table.size()) != size)
        fail(path + ": table has " + std::to_string(table.size()) + " rows, expected " +
             std::to_string(size));
    ParsedGroup g;
    g.backend = std::make_shared<FiniteCayley>(std::move(table));
    return g;
}

ParsedGroup load_rws_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("rws file '" + path + "' cannot be opened");
    std::string line;
    int lineno = 0;
    std::vector<char> names;
    std::map<char, int> letter_of;
    std::vector<std::pair<int, int>> inverse_pairs;
    std::vector<RewriteRule> rules;

    auto parse_word = [&](const std::string& s, const std::string& where) {
        Word w;
        if (s == "1") return w;  // empty word
        for (char c : s) {
            auto it = letter_of.find(c);
            if (it == letter_of.end())
                fail(where + ": unknown letter '" + std::string(1, c) + "'");
            w.push_back(it->second);
        }
        return w;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        auto where = [&] { return path + " line " + std::to_string(lineno); };
        if (toks[0] == "kind") {
            if (toks.size() != 2 || toks[1] != "rws") fail(where() + ": kind must be 'rws'");
        } else if (toks[0] == "letters") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].size() != 1 || toks[i] == "1")
                    fail(where() + ": letters must be single characters (and not '1')");
                char c = toks[i][0];
                if (letter_of.count(c)) fail(where() + ": duplicate letter '" + toks[i] + "'");
                names.push_back(c);
                letter_of[c] = static_cast<int>(names.size());
            }
        } else if (toks[0] == "inverse") {
            if (toks.size() != 3 || toks[1].size() != 1 || toks[2].size() != 1)
                fail(where() + ": inverse takes two letters");
            auto a = letter_of.find(toks[1][0]);
            auto b = letter_of.find(toks[2][0]);
            if (a == letter_of.end() || b == letter_of.end())
                fail(where() + ": inverse names an undeclared letter");
            inverse_pairs.push_back({a->second, b->second});
        } else if (toks[0] == "rule") {
            if (toks.size() != 3) fail(where() + ": rule takes two words (use 1 for empty)");
            rules.push_back({parse_word(toks[1], where()), parse_word(toks[2], where())});
        } else {
            fail(where() + ": unknown field '" + toks[0] + "'");
        }
    }
    if (names.empty()) fail(path + ": no letters declared");
    std::vector<int> inverse(names.size(), 0);
    for (auto [a, b] : inverse_pairs) {
        inverse[static_cast<std::size_t>(a - 1)] = b;
        inverse[static_cast<std::size_t>(b - 1)] = a;
    }
    for (std::size_t i = 0; i < inverse.size(); ++i)
        if (inverse[i] == 0)
            fail(path + ": letter '" + std::string(1, names[i]) + "' has no declared inverse");

    ParsedGroup g;
    g.backend =
        std::make_shared<RewritingSystem>(static_cast<int>(names.size()), std::move(rules),
                                          std::move(inverse));
    g.letter_names = std::move(names);
    return g;
}

}  // namespace

ParsedGroup parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail("group spec '" + spec + "': expected kind:params (free:R, fpc:m1,m2,..., "
             "cayley:FILE, rws:FILE)");
    std::string kind = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    ParsedGroup g;
    if (kind == "free") {
        int rank = 0;
        try {
            rank = std::stoi(params);
        } catch (const std::exception&) {
            fail("group spec field rank: '" + params + "' is not an integer");
        }
        g.backend = std::make_shared<FreeGroup>(rank);
    } else if (kind == "fpc") {
        g.backend = std::make_shared<FreeProductCyclic>(parse_int_list(params, "group spec field orders"));
    } else if (kind == "cayley") {
        g = load_cayley_file(params);
    } else if (kind == "rws") {
        g = load_rws_file(params);
    } else {
        fail("group spec '" + spec + "': unknown kind '" + kind + "'");
    }
    g.spec = spec;
    return g;
}

namespace {

Word parse_one_word(const ParsedGroup& group, const std::string& text) {
    std::map<char, int> letter_of;
    if (!group.letter_names.empty()) {
        for (std::size_t i = 0; i < group.letter_names.size(); ++i)
            letter_of[group.letter_names[i]] = static_cast<int>(i + 1);
    }
    // Signed letters first; translated into the backend's raw space below.
    Word letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        int letter = 0;
        if (!letter_of.empty()) {
            auto it = letter_of.find(c);
            if (it == letter_of.end())
                fail("generator word '" + text + "': unknown letter '" + std::string(1, c) + "'");
            letter = it->second;
        } else {
            if (c < 'a' || c > 'z')
                fail("generator word '" + text + "': letters must be a..z");
            letter = c - 'a' + 1;
        }
        bool inverse = i + 1 < text.size() && text[i + 1] == '\'';
        if (inverse) ++i;
        letters.push_back(inverse ? -letter : letter);
    }

    const GroupBackend& b = *group.backend;
    switch (b.backend_kind()) {
        case BackendKind::FreeGroup:
        case BackendKind::RewritingSystem:
            return b.canonicalize(letters);
        case BackendKind::FreeProductCyclic:
            return b.canonicalize(FreeProductCyclic::from_letters(letters));
        case BackendKind::FiniteCayley: {
            const auto& g = dynamic_cast<const FiniteCayley&>(b);
            Word raw;
            for (std::int32_t v : letters) {
                int idx = (v > 0 ? v : -v) - 1;
                if (idx >= g.size())
                    fail("generator word '" + text + "': element index " + std::to_string(idx) +
                         " out of range");
                raw.push_back(v > 0 ? idx : g.inverse_index(idx));
            }
            return b.canonicalize(raw);
        }
    }
    fail("unreachable backend kind");
}

std::vector<Word> standard_words(const ParsedGroup& group) {
    const GroupBackend& b = *group.backend;
    std::vector<Word> words;
    switch (b.backend_kind()) {
        case BackendKind::FreeGroup: {
            const auto& g = dynamic_cast<const FreeGroup&>(b);
            for (int i = 1; i <= g.rank(); ++i) {
                words.push_back(Word{i});
                words.push_back(Word{-i});
            }
            break;
        }
        case BackendKind::FreeProductCyclic: {
            const auto& g = dynamic_cast<const FreeProductCyclic&>(b);
            for (int j = 1; j <= g.factor_count(); ++j) {
                words.push_back(b.canonicalize(Word{j, 1}));
                words.push_back(b.canonicalize(Word{j, -1}));
            }
            break;
        }
        case BackendKind::FiniteCayley: {
            const auto& g = dynamic_cast<const FiniteCayley&>(b);
            for (int i = 0; i < g.size(); ++i)
                if (i != g.identity_index()) words.push_back(Word{i});
            break;
        }
        case BackendKind::RewritingSystem: {
            const auto& g = dynamic_cast<const RewritingSystem&>(b);
            for (int i = 1; i <= g.alphabet_size(); ++i) words.push_back(b.canonicalize(Word{i}));
            break;
        }
    }
    return words;
}

}  // namespace

std::vector<Word> parse_generator_words(const ParsedGroup& group, const std::string& gens) {
    if (!group.backend) fail("parse_generator_words: no backend");
    if (gens == "standard") return standard_words(group);
    std::vector<Word> out;
    std::string token;
    std::istringstream is(gens);
    while (std::getline(is, token, ',')) {
        if (token.empty()) fail("generator list contains an empty word");
        out.push_back(parse_one_word(group, token));
    }
    if (out.empty()) fail("generator list is empty");
    return out;
}

GeneratingSet parse_generating_set(const ParsedGroup& group, const std::string& gens) {
    return GeneratingSet::from_words(group.backend, parse_generator_words(group, gens));
}

std::string word_to_text(const GroupBackend& backend, const Word& w) {
    return word_to_text(backend, w, {});
}

std::string word_to_text(const GroupBackend& backend, const Word& w,
                         const std::vector<char>& letter_names) {
    auto name = [&](int letter) -> std::string {
        if (!letter_names.empty()) {
            if (letter >= 1 && letter <= static_cast<int>(letter_names.size()))
                return std::string(1, letter_names[static_cast<std::size_t>(letter - 1)]);
            return "#" + std::to_string(letter);
        }
        if (letter >= 1 && letter <= 26) return std::string(1, static_cast<char>('a' + letter - 1));
        return "#" + std::to_string(letter);
    };

    std::string out;
    switch (backend.backend_kind()) {
        case BackendKind::FreeGroup:
        case BackendKind::RewritingSystem:
            for (std::int32_t v : w) out += v > 0 ? name(v) : name(-v) + "'";
            break;
        case BackendKind::FreeProductCyclic:
            for (std::size_t i = 0; i < w.size(); i += 2) {
                std::int32_t f = w[i];
                std::int32_t e = w[i + 1];
                std::string letter = e > 0 ? name(f) : name(f) + "'";
                for (std::int32_t r = 0; r < std::abs(e); ++r) out += letter;
            }
            break;
        case BackendKind::FiniteCayley: {
            const auto& g = dynamic_cast<const FiniteCayley&>(backend);
            if (w.size() == 1 && w[0] != g.identity_index()) out = name(w[0] + 1);
            break;
        }
    }
    return out.empty() ? "1" : out;
}

TreeSpec parse_tree_spec(const std::string& text) {
    std::vector<int> degrees;
    std::optional<int> k;
    auto toks = split_ws(text);
    if (toks.empty()) fail("tree spec is empty");
    for (const auto& tok : toks) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            degrees = parse_int_list(tok, "tree spec field degrees");
        } else {
            std::string key = tok.substr(0, eq);
            std::string val = tok.substr(eq + 1);
            if (key == "degrees") {
                degrees = parse_int_list(val, "tree spec field degrees");
            } else if (key == "k") {
                try {
                    k = std::stoi(val);
                } catch (const std::exception&) {
                    fail("tree spec field k: '" + val + "' is not an integer");
                }
            } else {
                fail("tree spec: unknown field '" + key + "'");
            }
        }
    }
    if (degrees.empty()) fail("tree spec: no degrees given");
    return TreeSpec::make(std::move(degrees), k);
}

}  // namespace hermcert
