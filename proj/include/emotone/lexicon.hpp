#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "emotone/emotion.hpp"

namespace emotone {

// Lowercased word -> emotion. The canonical table is built into the binary
// and mirrored at data/lexicon.tsv (one `word<TAB>emotion` pair per line).
using Lexicon = std::unordered_map<std::string, Emotion>;

const Lexicon& builtin_lexicon();

// The built-in table as (word, emotion) rows in file order.
const std::vector<std::pair<std::string, Emotion>>& builtin_lexicon_rows();

// Parses a `word<TAB>emotion` file. Throws DomainError naming the line on
// malformed input.
Lexicon load_lexicon(const std::string& path);

// Words associated with the stimulus emotions (anger, fear, surprise);
// the rule-based offline rewriter deletes these.
bool is_sensational_word(const std::string& lower_word);

}  // namespace emotone
