#include "emotone/text.hpp"

#include <cctype>

namespace emotone {

namespace {

bool is_alnum(unsigned char c) { return std::isalnum(c) != 0; }
bool is_space(unsigned char c) { return std::isspace(c) != 0; }
bool is_vowel(unsigned char c) {
    const unsigned char l = static_cast<unsigned char>(std::tolower(c));
    return l == 'a' || l == 'e' || l == 'i' || l == 'o' || l == 'u' || l == 'y';
}
bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_alnum(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::string word;
        while (i < n) {
            const char c = text[i];
            if (is_alnum(static_cast<unsigned char>(c))) {
                word.push_back(c);
                ++i;
            } else if (c == '\'' && i + 1 < n && is_alnum(static_cast<unsigned char>(text[i + 1]))) {
                word.push_back(c);
                ++i;
            } else {
                break;
            }
        }
        words.push_back(std::move(word));
    }
    return words;
}

std::vector<std::string> split_words_lower(std::string_view text) {
    std::vector<std::string> words = split_words(text);
    for (std::string& w : words)
        for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return words;
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && is_space(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < n && !is_space(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> segments;
    std::string current;
    const std::size_t n = text.size();
    for (std::size_t i = 0; i < n; ++i) {
        current.push_back(text[i]);
        if (is_terminator(text[i]) &&
            (i + 1 == n || is_space(static_cast<unsigned char>(text[i + 1])))) {
            segments.push_back(current);
            current.clear();
        }
    }
    if (!current.empty()) segments.push_back(current);

    std::vector<std::string> sentences;
    for (std::string& seg : segments)
        if (!split_words(seg).empty()) sentences.push_back(trim(seg));
    return sentences;
}

std::size_t count_sentences(std::string_view text) { return split_sentences(text).size(); }

std::size_t count_syllables_word(std::string_view word) {
    std::size_t groups = 0;
    bool in_group = false;
    for (char c : word) {
        if (is_vowel(static_cast<unsigned char>(c))) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    const std::size_t n = word.size();
    if (n >= 2 && (word[n - 1] == 'e' || word[n - 1] == 'E')) {
        const unsigned char prev = static_cast<unsigned char>(word[n - 2]);
        const bool consonant_le =
            (std::tolower(prev) == 'l') && n >= 3 &&
            !is_vowel(static_cast<unsigned char>(word[n - 3]));
        if (!consonant_le && !is_vowel(prev)) --groups;
    }
    return groups < 1 ? 1 : groups;
}

std::string truncate_tokens(std::string_view text, std::size_t max_tokens) {
    std::vector<std::string> tokens = split_tokens(text);
    if (tokens.size() > max_tokens) tokens.resize(max_tokens);
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

std::size_t utf8_length(std::string_view text) {
    std::size_t count = 0;
    for (unsigned char c : text)
        if ((c & 0xC0) != 0x80) ++count;
    return count;
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string trim(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && is_space(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && is_space(static_cast<unsigned char>(text[e - 1]))) --e;
    return std::string(text.substr(b, e - b));
}

}  // namespace emotone
