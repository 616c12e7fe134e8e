#include "wordsym/symmetry.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>

#include "wordsym/errors.hpp"

namespace wordsym {

void Symmetry::validate() const {
    const int k = alphabet_size();
    if (k < 1 || k > kMaxAlphabet) throw InvalidInput("symmetry: bad alphabet size");
    std::vector<bool> seen(k, false);
    for (Letter image : perm) {
        if (image >= k) throw InvalidInput("symmetry: image letter out of range");
        if (seen[image]) throw InvalidInput("symmetry: permutation is not a bijection");
        seen[image] = true;
    }
}

Symmetry identity_morphism(int alphabet_size) {
    Symmetry s;
    s.kind = SymKind::morphism;
    s.perm.resize(alphabet_size);
    for (int i = 0; i < alphabet_size; ++i) s.perm[i] = static_cast<Letter>(i);
    s.validate();
    return s;
}

Symmetry reversal(int alphabet_size) {
    Symmetry s = identity_morphism(alphabet_size);
    s.kind = SymKind::antimorphism;
    return s;
}

Symmetry make_symmetry(SymKind kind, int alphabet_size,
                       const std::vector<std::pair<Letter, Letter>>& moves) {
    Symmetry s = identity_morphism(alphabet_size);
    s.kind = kind;
    for (auto [from, to] : moves) {
        if (from >= alphabet_size || to >= alphabet_size)
            throw InvalidInput("symmetry: letter out of alphabet range");
        s.perm[from] = to;
    }
    s.validate();
    return s;
}

Word Symmetry::operator()(const Word& w) const {
    const int k = alphabet_size();
    Word out;
    out.resize(w.size());
    if (is_morphism()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            unsigned char c = w[i];
            if (static_cast<int>(c) >= k)
                throw InvalidInput("apply: letter out of alphabet range");
            out[i] = static_cast<char>(perm[c]);
        }
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            unsigned char c = w[w.size() - 1 - i];
            if (static_cast<int>(c) >= k)
                throw InvalidInput("apply: letter out of alphabet range");
            out[i] = static_cast<char>(perm[c]);
        }
    }
    return out;
}

Symmetry compose(const Symmetry& a, const Symmetry& b) {
    if (a.alphabet_size() != b.alphabet_size())
        throw InvalidInput("compose: alphabet mismatch");
    Symmetry r;
    r.kind = (a.kind == b.kind) ? SymKind::morphism : SymKind::antimorphism;
    r.perm.resize(a.perm.size());
    for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
    return r;
}

Symmetry inverse(const Symmetry& s) {
    Symmetry r;
    r.kind = s.kind;
    r.perm.resize(s.perm.size());
    for (std::size_t i = 0; i < s.perm.size(); ++i)
        r.perm[s.perm[i]] = static_cast<Letter>(i);
    return r;
}

bool is_involutive(const Symmetry& s) {
    for (std::size_t i = 0; i < s.perm.size(); ++i)
        if (s.perm[s.perm[i]] != i) return false;
    return true;
}

bool is_involutive_antimorphism(const Symmetry& s) {
    return s.is_antimorphism() && is_involutive(s);
}

bool is_theta_palindrome(const Word& w, const Symmetry& theta) {
    if (!theta.is_antimorphism())
        throw InvalidInput("is_theta_palindrome: theta must be an antimorphism");
    const std::size_t n = w.size();
    // All positions are compared; for non-involutive theta the two halves are
    // not equivalent.
    for (std::size_t i = 0; i < n; ++i) {
        unsigned char mirrored = w[n - 1 - i];
        if (static_cast<int>(mirrored) >= theta.alphabet_size())
            throw InvalidInput("is_theta_palindrome: letter out of range");
        if (static_cast<unsigned char>(w[i]) != theta.perm[mirrored]) return false;
    }
    return true;
}

static int parse_sym_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidInput("symmetry: bad letter '" + std::string(s) + "'");
    return value;
}

Symmetry parse_symmetry(std::string_view text, int alphabet_size) {
    if (text == "R") return reversal(alphabet_size);
    SymKind kind;
    if (text.rfind("a:", 0) == 0)
        kind = SymKind::antimorphism;
    else if (text.rfind("m:", 0) == 0)
        kind = SymKind::morphism;
    else
        throw InvalidInput("symmetry: expected 'R', 'a:...' or 'm:...', got '" +
                           std::string(text) + "'");

    std::vector<std::pair<Letter, Letter>> moves;
    std::string_view body = text.substr(2);
    std::size_t start = 0;
    while (start < body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view item = body.substr(
            start, comma == std::string_view::npos ? comma : comma - start);
        std::size_t arrow = item.find('>');
        if (arrow == std::string_view::npos)
            throw InvalidInput("symmetry: expected 'a>b' in '" + std::string(item) + "'");
        int from = parse_sym_int(item.substr(0, arrow));
        int to = parse_sym_int(item.substr(arrow + 1));
        if (from < 0 || from >= alphabet_size || to < 0 || to >= alphabet_size)
            throw InvalidInput("symmetry: letter out of alphabet range in '" +
                               std::string(item) + "'");
        moves.emplace_back(static_cast<Letter>(from), static_cast<Letter>(to));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return make_symmetry(kind, alphabet_size, moves);
}

std::string format_symmetry(const Symmetry& s) {
    bool is_id = true;
    for (std::size_t i = 0; i < s.perm.size(); ++i)
        if (s.perm[i] != i) is_id = false;
    if (is_id && s.is_antimorphism()) return "R";
    std::string out = s.is_antimorphism() ? "a:" : "m:";
    bool first = true;
    for (std::size_t i = 0; i < s.perm.size(); ++i) {
        if (s.perm[i] == i) continue;
        if (!first) out.push_back(',');
        out += std::to_string(i) + ">" + std::to_string(static_cast<int>(s.perm[i]));
        first = false;
    }
    return out;
}

SymmetryGroup SymmetryGroup::generate(const std::vector<Symmetry>& generators,
                                      std::size_t max_elements) {
    if (generators.empty())
        throw InvalidInput("generate_group: empty generator list");
    const int k = generators.front().alphabet_size();
    for (const Symmetry& g : generators) {
        g.validate();
        if (g.alphabet_size() != k)
            throw InvalidInput("generate_group: generators on different alphabets");
    }
    if (max_elements == 0) {
        // 2 * k! (all morphisms and antimorphisms), capped so the composition
        // table stays allocatable.
        max_elements = 2;
        for (int i = 2; i <= k; ++i) {
            max_elements *= i;
            if (max_elements >= 4096) {
                max_elements = 4096;
                break;
            }
        }
    }

    SymmetryGroup g;
    g.alphabet_size_ = k;

    std::map<std::pair<std::vector<Letter>, SymKind>, int> seen;
    auto add = [&](const Symmetry& s) -> int {
        auto key = std::make_pair(s.perm, s.kind);
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        int id = static_cast<int>(g.elements_.size());
        if (g.elements_.size() >= max_elements)
            throw GroupTooLarge("generate_group: closure exceeds element bound");
        g.elements_.push_back(s);
        seen.emplace(key, id);
        return id;
    };

    add(identity_morphism(k));
    for (const Symmetry& s : generators) add(s);

    // Closure under composition, iterated to a fixpoint so late arrivals get
    // paired with every earlier element.
    for (bool grew = true; grew;) {
        std::size_t before = g.elements_.size();
        for (std::size_t i = 0; i < g.elements_.size(); ++i) {
            for (std::size_t j = 0; j < g.elements_.size(); ++j) {
                add(compose(g.elements_[i], g.elements_[j]));
            }
        }
        grew = g.elements_.size() > before;
    }

    const int n = g.size();
    g.table_.assign(n, std::vector<int>(n, -1));
    g.inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Symmetry c = compose(g.elements_[i], g.elements_[j]);
            auto it = seen.find(std::make_pair(c.perm, c.kind));
            if (it == seen.end())
                throw ContradictionError("generate_group: table not closed");
            g.table_[i][j] = it->second;
        }
    }
    Symmetry id = identity_morphism(k);
    g.identity_ = seen.at(std::make_pair(id.perm, id.kind));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g.table_[i][j] == g.identity_ && g.table_[j][i] == g.identity_) {
                g.inverse_[i] = j;
                break;
            }
        }
        if (g.inverse_[i] < 0)
            throw ContradictionError("generate_group: element without inverse");
    }
    for (int i = 0; i < n; ++i) {
        if (g.elements_[i].is_antimorphism() && g.table_[i][i] == g.identity_)
            g.g2_.push_back(i);
    }
    return g;
}

int SymmetryGroup::index_of(const Symmetry& s) const {
    for (int i = 0; i < size(); ++i)
        if (elements_[i] == s) return i;
    return -1;
}

bool SymmetryGroup::contains_antimorphism() const {
    for (const Symmetry& s : elements_)
        if (s.is_antimorphism()) return true;
    return false;
}

SymmetryGroup parse_group(std::string_view text, int alphabet_size) {
    std::vector<Symmetry> gens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string_view item = text.substr(
            start, semi == std::string_view::npos ? semi : semi - start);
        if (!item.empty()) gens.push_back(parse_symmetry(item, alphabet_size));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    if (gens.empty()) throw InvalidInput("group: no symmetries in '" +
                                         std::string(text) + "'");
    return SymmetryGroup::generate(gens);
}

std::vector<Word> orbit(const Word& w, const SymmetryGroup& g) {
    std::set<Word> out;
    for (const Symmetry& s : g.elements()) out.insert(s(w));
    return {out.begin(), out.end()};
}

Word orbit_canonical(const Word& w, const SymmetryGroup& g) {
    Word best = w;
    for (const Symmetry& s : g.elements()) {
        Word img = s(w);
        if (img < best) best = std::move(img);
    }
    return best;
}

}  // namespace wordsym
