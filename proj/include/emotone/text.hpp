#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace emotone {

// A word is a maximal run of alphanumeric characters; apostrophes internal
// to a word are retained ("don't" is one word).
std::vector<std::string> split_words(std::string_view text);

// Lowercased words, for bag-of-words style lookups.
std::vector<std::string> split_words_lower(std::string_view text);

// Whitespace-delimited tokens.
std::vector<std::string> split_tokens(std::string_view text);

// Sentence segments: the text is split after '.', '!' or '?' followed by
// whitespace or end-of-text. A text with no terminator is one segment.
// Segments without any word are dropped.
std::vector<std::string> split_sentences(std::string_view text);

std::size_t count_sentences(std::string_view text);

// Syllables of a single word: maximal groups of vowels (aeiouy, case
// insensitive) count one each; a trailing silent 'e' subtracts one unless
// the word ends in 'le' after a consonant; every word has at least one.
std::size_t count_syllables_word(std::string_view word);

// First `max_tokens` whitespace tokens rejoined by single spaces.
std::string truncate_tokens(std::string_view text, std::size_t max_tokens);

// Unicode code points in a UTF-8 string (continuation bytes not counted).
std::size_t utf8_length(std::string_view text);

std::string to_lower(std::string_view text);

std::string trim(std::string_view text);

}  // namespace emotone
