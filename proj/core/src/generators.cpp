#include "wordsym/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "wordsym/errors.hpp"

namespace wordsym {

void Substitution::validate() const {
    const int k = alphabet_size();
    if (k < 1) throw InvalidInput("substitution: empty image list");
    if (k > kMaxAlphabet) throw InvalidInput("substitution: alphabet too large");
    for (const Word& image : images) {
        if (image.empty())
            throw InvalidInput("substitution: erasing image (|image| = 0)");
        if (!word_fits(image, k))
            throw InvalidInput("substitution: image letter out of range");
    }
}

Word Substitution::apply(const Word& w) const {
    Word out;
    for (unsigned char c : w) {
        if (static_cast<int>(c) >= alphabet_size())
            throw InvalidInput("substitution: letter out of range");
        out += images[c];
    }
    return out;
}

Substitution parse_substitution(std::string_view text) {
    std::vector<std::pair<int, Word>> rules;
    int max_letter = -1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        // trim
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                                 line.back() == '\r'))
            line.remove_suffix(1);
        if (!line.empty()) {
            std::size_t arrow = line.find("->");
            if (arrow == std::string_view::npos)
                throw InvalidInput("substitution: expected 'letter -> image' in '" +
                                   std::string(line) + "'");
            std::string_view lhs = line.substr(0, arrow);
            std::string_view rhs = line.substr(arrow + 2);
            while (!lhs.empty() && lhs.back() == ' ') lhs.remove_suffix(1);
            while (!rhs.empty() && rhs.front() == ' ') rhs.remove_prefix(1);
            int letter = 0;
            auto [p, ec] = std::from_chars(lhs.data(), lhs.data() + lhs.size(), letter);
            if (ec != std::errc{} || p != lhs.data() + lhs.size() || letter < 0)
                throw InvalidInput("substitution: bad letter '" + std::string(lhs) + "'");
            rules.emplace_back(letter, parse_word(rhs));
            max_letter = std::max(max_letter, letter);
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (rules.empty()) throw InvalidInput("substitution: no rules");
    Substitution s;
    s.images.resize(max_letter + 1);
    std::vector<bool> defined(max_letter + 1, false);
    for (auto& [letter, image] : rules) {
        if (defined[letter])
            throw InvalidInput("substitution: duplicate rule for letter " +
                               std::to_string(letter));
        defined[letter] = true;
        s.images[letter] = std::move(image);
    }
    for (int a = 0; a <= max_letter; ++a)
        if (!defined[a])
            throw InvalidInput("substitution: missing rule for letter " +
                               std::to_string(a));
    s.validate();
    return s;
}

Substitution load_substitution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open substitution file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_substitution(buf.str());
}

Word fixed_point_prefix(const Substitution& s, Letter seed, std::size_t min_len) {
    s.validate();
    if (static_cast<int>(seed) >= s.alphabet_size())
        throw InvalidInput("fixed point: seed letter out of range");
    const Word& seed_image = s.images[seed];
    if (seed_image.size() < 2 || static_cast<unsigned char>(seed_image[0]) != seed)
        throw InvalidInput(
            "fixed point: seed is not prolongable (image must start with the "
            "seed and have length >= 2)");

    // The fixed point u satisfies u = s(u), so it can be materialized by
    // appending the image of the next unread letter.
    Word buf = seed_image;
    std::size_t read = 1;
    while (buf.size() < min_len) {
        buf += s.images[static_cast<unsigned char>(buf[read])];
        ++read;
    }
    if (buf.size() > min_len) buf.resize(min_len);
    return buf;
}

Word tbm_prefix(int b, int m, std::size_t len) {
    if (b < 2 || m < 2) throw InvalidInput("tbm: requires b >= 2 and m >= 2");
    if (m > kMaxAlphabet) throw InvalidInput("tbm: alphabet too large");
    Word out;
    out.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
        std::size_t v = n;
        unsigned digit_sum = 0;
        while (v) {
            digit_sum += static_cast<unsigned>(v % b);
            v /= b;
        }
        out[n] = static_cast<char>(digit_sum % m);
    }
    return out;
}

Substitution tbm_substitution(int b, int m) {
    if (b < 2 || m < 2) throw InvalidInput("tbm: requires b >= 2 and m >= 2");
    if (m > kMaxAlphabet) throw InvalidInput("tbm: alphabet too large");
    Substitution s;
    s.images.resize(m);
    for (int k = 0; k < m; ++k) {
        Word image;
        image.resize(b);
        for (int j = 0; j < b; ++j) image[j] = static_cast<char>((k + j) % m);
        s.images[k] = std::move(image);
    }
    return s;
}

Word champernowne_prefix(std::size_t len) {
    Word out;
    out.reserve(len);
    for (std::uint64_t n = 1; out.size() < len; ++n) {
        char digits[24];
        auto [end, ec] = std::to_chars(digits, digits + sizeof digits, n);
        for (char* p = digits; p != end && out.size() < len; ++p)
            out.push_back(static_cast<char>(*p - '0'));
    }
    return out;
}

Word periodic_prefix(const Word& period, std::size_t len) {
    if (period.empty()) throw InvalidInput("periodic: empty period");
    Word out;
    out.reserve(len);
    while (out.size() + period.size() <= len) out += period;
    out.append(period, 0, len - out.size());
    return out;
}

DensityReport letter_densities(const Word& w, int alphabet_size) {
    if (w.empty()) throw InvalidInput("letter_densities: empty word");
    if (!word_fits(w, alphabet_size))
        throw InvalidInput("letter_densities: letter out of alphabet range");
    DensityReport r;
    r.length = w.size();
    r.counts.assign(alphabet_size, 0);
    for (unsigned char c : w) ++r.counts[c];
    r.frequency.resize(alphabet_size);
    for (int a = 0; a < alphabet_size; ++a)
        r.frequency[a] = static_cast<double>(r.counts[a]) / static_cast<double>(w.size());
    r.expected.assign(alphabet_size, std::nullopt);
    return r;
}

DensityReport letter_densities(const WordSpec& spec, std::size_t prefix_len) {
    DensityReport r = letter_densities(spec.prefix(prefix_len), spec.alphabet_size());
    if (auto expected = spec.expected_densities()) {
        for (int a = 0; a < spec.alphabet_size(); ++a) r.expected[a] = (*expected)[a];
    }
    return r;
}

WordSpec WordSpec::fixed_point(Substitution s, Letter seed, std::string name) {
    s.validate();
    if (static_cast<int>(seed) >= s.alphabet_size())
        throw InvalidInput("word spec: seed letter out of range");
    const Word& image = s.images[seed];
    if (image.size() < 2 || static_cast<unsigned char>(image[0]) != seed)
        throw InvalidInput("word spec: seed is not prolongable");
    WordSpec spec;
    spec.kind_ = Kind::fixed_point;
    spec.alphabet_size_ = s.alphabet_size();
    spec.subst_ = std::move(s);
    spec.seed_ = seed;
    spec.text_ = name.empty() ? "fixpoint:<inline>:" + std::to_string(int(seed))
                              : std::move(name);
    return spec;
}

WordSpec WordSpec::tbm(int b, int m) {
    if (b < 2 || m < 2) throw InvalidInput("tbm: requires b >= 2 and m >= 2");
    WordSpec spec;
    spec.kind_ = Kind::tbm;
    spec.alphabet_size_ = m;
    spec.b_ = b;
    spec.m_ = m;
    spec.text_ = "tbm:" + std::to_string(b) + "," + std::to_string(m);
    return spec;
}

WordSpec WordSpec::champernowne() {
    WordSpec spec;
    spec.kind_ = Kind::champernowne;
    spec.alphabet_size_ = 10;
    spec.text_ = "champernowne";
    return spec;
}

WordSpec WordSpec::periodic(Word period) {
    if (period.empty()) throw InvalidInput("periodic: empty period");
    WordSpec spec;
    spec.kind_ = Kind::periodic;
    spec.alphabet_size_ = min_alphabet(period);
    spec.text_ = "periodic:" + format_word(period, spec.alphabet_size_);
    spec.payload_ = std::move(period);
    return spec;
}

WordSpec WordSpec::literal(Word w) {
    if (w.empty()) throw InvalidInput("literal: empty word");
    WordSpec spec;
    spec.kind_ = Kind::literal;
    spec.alphabet_size_ = min_alphabet(w);
    spec.text_ = "literal:" + format_word(w, spec.alphabet_size_);
    spec.payload_ = std::move(w);
    return spec;
}

WordSpec WordSpec::thue_morse() {
    Substitution s;
    s.images = {word_from_digits("01"), word_from_digits("10")};
    WordSpec spec = fixed_point(std::move(s), 0, "tm");
    return spec;
}

WordSpec WordSpec::fibonacci() {
    Substitution s;
    s.images = {word_from_digits("01"), word_from_digits("0")};
    return fixed_point(std::move(s), 0, "fib");
}

WordSpec WordSpec::example62() {
    Substitution s;
    s.images = {word_from_digits("0130"), word_from_digits("1021"),
                word_from_digits("102"), word_from_digits("013")};
    WordSpec spec = fixed_point(std::move(s), 0, "example62");
    spec.example62_ = true;
    return spec;
}

WordSpec WordSpec::parse(std::string_view text) {
    if (text == "tm") return thue_morse();
    if (text == "fib") return fibonacci();
    if (text == "example62") return example62();
    if (text == "champernowne") return champernowne();
    if (text.rfind("tbm:", 0) == 0) {
        std::string_view body = text.substr(4);
        std::size_t comma = body.find(',');
        if (comma == std::string_view::npos)
            throw InvalidInput("word spec: expected tbm:b,m");
        int b = 0, m = 0;
        auto [p1, e1] = std::from_chars(body.data(), body.data() + comma, b);
        auto [p2, e2] =
            std::from_chars(body.data() + comma + 1, body.data() + body.size(), m);
        if (e1 != std::errc{} || e2 != std::errc{} || p1 != body.data() + comma ||
            p2 != body.data() + body.size())
            throw InvalidInput("word spec: expected tbm:b,m");
        return tbm(b, m);
    }
    if (text.rfind("periodic:", 0) == 0)
        return periodic(parse_word(text.substr(9)));
    if (text.rfind("literal:", 0) == 0)
        return literal(parse_word(text.substr(8)));
    if (text.rfind("fixpoint:", 0) == 0) {
        std::string_view body = text.substr(9);
        std::size_t colon = body.rfind(':');
        if (colon == std::string_view::npos)
            throw InvalidInput("word spec: expected fixpoint:<subst-file>:<seed>");
        std::string path(body.substr(0, colon));
        int seed = 0;
        std::string_view seed_text = body.substr(colon + 1);
        auto [p, ec] =
            std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), seed);
        if (ec != std::errc{} || p != seed_text.data() + seed_text.size() || seed < 0)
            throw InvalidInput("word spec: bad seed '" + std::string(seed_text) + "'");
        Substitution s = load_substitution_file(path);
        return fixed_point(std::move(s), static_cast<Letter>(seed),
                           std::string(text));
    }
    throw InvalidInput("word spec: unknown spec '" + std::string(text) + "'");
}

std::size_t WordSpec::bound() const {
    return bounded() ? payload_.size() : std::numeric_limits<std::size_t>::max();
}

Word WordSpec::prefix(std::size_t len) const {
    switch (kind_) {
        case Kind::fixed_point:
            return fixed_point_prefix(subst_, seed_, len);
        case Kind::tbm:
            return tbm_prefix(b_, m_, len);
        case Kind::champernowne:
            return champernowne_prefix(len);
        case Kind::periodic:
            return periodic_prefix(payload_, len);
        case Kind::literal:
            return payload_.substr(0, std::min(len, payload_.size()));
    }
    throw InvalidInput("word spec: bad kind");
}

std::optional<std::vector<double>> WordSpec::expected_densities() const {
    if (!example62_) return std::nullopt;
    const double s3 = std::sqrt(3.0);
    return std::vector<double>{(s3 - 1) / 2, (s3 - 1) / 2, (2 - s3) / 2,
                               (2 - s3) / 2};
}

}  // namespace wordsym
