#include "wordsym/word.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace wordsym {

void Alphabet::validate() const {
    if (size < 1) throw InvalidInput("alphabet size must be at least 1");
    if (size > kMaxAlphabet)
        throw InvalidInput("alphabet size exceeds " + std::to_string(kMaxAlphabet));
    if (!names.empty()) {
        if (static_cast<int>(names.size()) != size)
            throw InvalidInput("alphabet needs one display name per letter");
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInput("alphabet display names must be distinct");
    }
}

Word word_from_digits(std::string_view digits) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw InvalidInput(std::string("not a digit: '") + c + "'");
        w.push_back(static_cast<char>(c - '0'));
    }
    return w;
}

static int parse_int(std::string_view s, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidInput(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return value;
}

Word parse_word(std::string_view text) {
    if (text.find(',') == std::string_view::npos) return word_from_digits(text);
    Word w;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(
            start, comma == std::string_view::npos ? comma : comma - start);
        int letter = parse_int(item, "letter index");
        if (letter < 0 || letter >= kMaxAlphabet)
            throw InvalidInput("letter index out of range: " + std::string(item));
        w.push_back(static_cast<char>(letter));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return w;
}

std::string format_word(const Word& w, int alphabet_size) {
    std::string out;
    if (alphabet_size <= 10) {
        out.reserve(w.size());
        for (unsigned char c : w) out.push_back(static_cast<char>('0' + c));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(static_cast<int>(static_cast<unsigned char>(w[i])));
    }
    return out;
}

int min_alphabet(const Word& w) {
    int k = 1;
    for (unsigned char c : w) k = std::max(k, static_cast<int>(c) + 1);
    return k;
}

}  // namespace wordsym
