#include "wordsym/repetitions.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "wordsym/errors.hpp"
#include "wordsym/pal_tree.hpp"

namespace wordsym {

namespace {

// Compares by length first, then lexicographically.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

}  // namespace

std::vector<OverlapWitness> find_overlaps(const Word& prefix,
                                          std::size_t max_report) {
    // Minimal overlaps have the form s[i..i+2p] with period p; periods are
    // scanned in increasing order so the collection can stop early once
    // max_report shorter witnesses exist.
    std::map<Word, std::size_t, ShortLex> found;  // factor -> first position
    const std::size_t len = prefix.size();
    for (std::size_t p = 1; len >= 2 * p + 1 && !(found.size() >= max_report); ++p) {
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < len; ++j) {
            if (prefix[j] == prefix[j + p]) {
                if (++run >= p + 1) {
                    std::size_t i = j - p;
                    auto [it, fresh] = found.emplace(prefix.substr(i, 2 * p + 1), i);
                    if (!fresh) it->second = std::min(it->second, i);
                }
            } else {
                run = 0;
            }
        }
    }
    std::vector<OverlapWitness> out;
    for (const auto& [factor, position] : found) {
        if (out.size() >= max_report) break;
        std::size_t p = factor.size() / 2;
        out.push_back({position, factor.substr(0, p), factor.substr(2 * p), factor});
    }
    return out;
}

std::vector<SquareWitness> find_squares(const Word& prefix, std::size_t max_report) {
    std::map<Word, std::size_t, ShortLex> roots;  // root -> first position
    const std::size_t len = prefix.size();
    for (std::size_t p = 1; len >= 2 * p && !(roots.size() >= max_report); ++p) {
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < len; ++j) {
            if (prefix[j] == prefix[j + p]) {
                if (++run >= p) {
                    std::size_t i = j + 1 - p;
                    auto [it, fresh] = roots.emplace(prefix.substr(i, p), i);
                    if (!fresh) it->second = std::min(it->second, i);
                }
            } else {
                run = 0;
            }
        }
    }
    std::vector<SquareWitness> out;
    for (const auto& [root, position] : roots) {
        if (out.size() >= max_report) break;
        out.push_back({position, root});
    }
    return out;
}

namespace {

// Does appending the last letter of w close a square? Any new square must be
// a suffix of w.
bool has_suffix_square(const Word& w) {
    const std::size_t len = w.size();
    for (std::size_t r = 1; 2 * r <= len; ++r)
        if (w.compare(len - 2 * r, r, w, len - r, r) == 0) return true;
    return false;
}

struct Dfs {
    int k;
    Symmetry theta;
    bool canonical_order;  // letters must first appear in increasing order
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = true;
    long long best = -1;
    std::set<Word> witnesses;
    std::vector<Word> frontier;
    PalTree tree;
    Word word;
    int used_letters = 0;
    std::vector<std::size_t> letter_count;

    Dfs(int alphabet, const Symmetry& th, std::uint64_t budget_limit)
        : k(alphabet),
          theta(th),
          canonical_order(true),
          budget(budget_limit),
          tree(th),
          letter_count(alphabet, 0) {
        for (int a = 0; a < th.alphabet_size(); ++a)
            if (th.perm[a] != a) canonical_order = false;
    }

    void consider() {
        if (used_letters != k) return;
        long long len = static_cast<long long>(word.size());
        if (len < best) return;
        if (len > best) {
            best = len;
            witnesses.clear();
        }
        witnesses.insert(word);
    }

    // Expands the subtree under the current word, which is already known to
    // be square-free and Θ-rich.
    void expand() {
        if (nodes >= budget) {
            exhausted = false;
            frontier.push_back(word);
            return;
        }
        ++nodes;
        consider();

        int limit = canonical_order ? std::min(k - 1, used_letters) : k - 1;
        for (int c = 0; c <= limit; ++c) {
            word.push_back(static_cast<char>(c));
            if (has_suffix_square(word)) {
                word.pop_back();
                continue;
            }
            long long before = tree.defect();
            tree.push(static_cast<Letter>(c));
            if (tree.defect() != before) {  // richness broken
                tree.pop();
                word.pop_back();
                continue;
            }
            if (letter_count[c]++ == 0) ++used_letters;
            expand();
            if (--letter_count[c] == 0) --used_letters;
            tree.pop();
            word.pop_back();
        }
    }

    // Replays a frontier word into the search state; entries come from a
    // checkpoint and were valid when captured.
    bool replay(const Word& w) {
        for (char ch : w) {
            int c = static_cast<unsigned char>(ch);
            if (c >= k) return false;
            word.push_back(ch);
            if (has_suffix_square(word)) return false;
            long long before = tree.defect();
            tree.push(static_cast<Letter>(c));
            if (tree.defect() != before) return false;
            if (letter_count[c]++ == 0) ++used_letters;
        }
        return true;
    }

    void unwind() {
        while (!word.empty()) {
            int c = static_cast<unsigned char>(word.back());
            if (--letter_count[c] == 0) --used_letters;
            tree.pop();
            word.pop_back();
        }
    }

    SearchResult result() const {
        SearchResult r;
        r.alphabet_size = k;
        r.max_length = std::max<long long>(best, 0);
        r.witnesses.assign(witnesses.begin(), witnesses.end());
        r.nodes_explored = nodes;
        r.exhausted = exhausted;
        return r;
    }
};

}  // namespace

SearchResult search_squarefree_rich(int alphabet_size, const Symmetry& theta,
                                    std::uint64_t node_budget,
                                    SearchCheckpoint* checkpoint) {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw InvalidInput("search: bad alphabet size");
    if (!is_involutive_antimorphism(theta))
        throw InvalidInput("search: theta must be an involutive antimorphism");
    if (theta.alphabet_size() != alphabet_size)
        throw InvalidInput("search: theta alphabet mismatch");

    Dfs dfs(alphabet_size, theta, node_budget);
    dfs.expand();

    if (checkpoint) {
        checkpoint->alphabet_size = alphabet_size;
        checkpoint->theta_text = format_symmetry(theta);
        checkpoint->best_length = std::max<long long>(dfs.best, 0);
        checkpoint->witnesses.assign(dfs.witnesses.begin(), dfs.witnesses.end());
        checkpoint->frontier = dfs.frontier;
        checkpoint->nodes_explored = dfs.nodes;
    }
    return dfs.result();
}

SearchResult resume_search(const SearchCheckpoint& from, std::uint64_t node_budget,
                           SearchCheckpoint* checkpoint) {
    Symmetry theta = parse_symmetry(from.theta_text, from.alphabet_size);
    if (!is_involutive_antimorphism(theta))
        throw InvalidInput("resume: theta must be an involutive antimorphism");

    Dfs dfs(from.alphabet_size, theta, node_budget);
    dfs.best = from.best_length;
    for (const Word& w : from.witnesses)
        if (static_cast<long long>(w.size()) == from.best_length)
            dfs.witnesses.insert(w);

    for (const Word& start : from.frontier) {
        if (!dfs.replay(start)) {
            dfs.unwind();
            continue;  // stale entry; skip rather than fail the whole resume
        }
        dfs.expand();
        dfs.unwind();
    }

    if (checkpoint) {
        checkpoint->alphabet_size = from.alphabet_size;
        checkpoint->theta_text = from.theta_text;
        checkpoint->best_length = std::max<long long>(dfs.best, 0);
        checkpoint->witnesses.assign(dfs.witnesses.begin(), dfs.witnesses.end());
        checkpoint->frontier = dfs.frontier;
        checkpoint->nodes_explored = dfs.nodes;
    }
    SearchResult r = dfs.result();
    return r;
}

void SearchCheckpoint::save(std::ostream& out) const {
    out << "wordsym-search-checkpoint v1\n";
    out << "alphabet " << alphabet_size << "\n";
    out << "theta " << theta_text << "\n";
    out << "best " << best_length << "\n";
    out << "nodes " << nodes_explored << "\n";
    for (const Word& w : witnesses)
        out << "w " << format_word(w, alphabet_size) << "\n";
    for (const Word& w : frontier)
        out << "f " << format_word(w, alphabet_size) << "\n";
}

SearchCheckpoint SearchCheckpoint::load(std::istream& in) {
    SearchCheckpoint cp;
    std::string line;
    if (!std::getline(in, line) || line != "wordsym-search-checkpoint v1")
        throw InvalidInput("checkpoint: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "alphabet") {
            row >> cp.alphabet_size;
        } else if (tag == "theta") {
            row >> cp.theta_text;
        } else if (tag == "best") {
            row >> cp.best_length;
        } else if (tag == "nodes") {
            row >> cp.nodes_explored;
        } else if (tag == "w" || tag == "f") {
            std::string text;
            row >> text;
            Word w = parse_word(text);
            (tag == "w" ? cp.witnesses : cp.frontier).push_back(w);
        } else {
            throw InvalidInput("checkpoint: unknown line '" + line + "'");
        }
        if (!row && !row.eof()) throw InvalidInput("checkpoint: bad line '" + line + "'");
    }
    if (cp.alphabet_size < 1) throw InvalidInput("checkpoint: missing alphabet");
    return cp;
}

}  // namespace wordsym
