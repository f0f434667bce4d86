#include "emotone/lexicon.hpp"

#include <fstream>

#include "emotone/errors.hpp"
#include "emotone/text.hpp"

namespace emotone {

namespace {

constexpr std::pair<const char*, Emotion> kRows[] = {
    {"outrage", Emotion::anger},      {"outraged", Emotion::anger},
    {"fury", Emotion::anger},         {"furious", Emotion::anger},
    {"rage", Emotion::anger},         {"enraged", Emotion::anger},
    {"angry", Emotion::anger},        {"anger", Emotion::anger},
    {"scorching", Emotion::anger},    {"slams", Emotion::anger},
    {"blasted", Emotion::anger},      {"blasts", Emotion::anger},
    {"condemns", Emotion::anger},     {"fuming", Emotion::anger},
    {"irate", Emotion::anger},        {"hostile", Emotion::anger},
    {"livid", Emotion::anger},        {"seething", Emotion::anger},
    {"wrath", Emotion::anger},        {"indignant", Emotion::anger},
    {"resentful", Emotion::anger},    {"feud", Emotion::anger},

    {"fear", Emotion::fear},          {"fears", Emotion::fear},
    {"afraid", Emotion::fear},        {"panic", Emotion::fear},
    {"terror", Emotion::fear},        {"terrified", Emotion::fear},
    {"dread", Emotion::fear},         {"alarm", Emotion::fear},
    {"alarming", Emotion::fear},      {"scare", Emotion::fear},
    {"scared", Emotion::fear},        {"frightening", Emotion::fear},
    {"anxious", Emotion::fear},       {"anxiety", Emotion::fear},
    {"threat", Emotion::fear},        {"threatens", Emotion::fear},
    {"menace", Emotion::fear},        {"peril", Emotion::fear},
    {"danger", Emotion::fear},        {"dangerous", Emotion::fear},
    {"crisis", Emotion::fear},        {"catastrophe", Emotion::fear},
    {"grim", Emotion::fear},          {"dire", Emotion::fear},

    {"sad", Emotion::sadness},        {"sadness", Emotion::sadness},
    {"grief", Emotion::sadness},      {"mourning", Emotion::sadness},
    {"mourns", Emotion::sadness},     {"tragic", Emotion::sadness},
    {"tragedy", Emotion::sadness},    {"sorrow", Emotion::sadness},
    {"heartbreak", Emotion::sadness}, {"heartbroken", Emotion::sadness},
    {"gloomy", Emotion::sadness},     {"despair", Emotion::sadness},
    {"dismal", Emotion::sadness},     {"bleak", Emotion::sadness},
    {"weeps", Emotion::sadness},      {"tears", Emotion::sadness},
    {"misery", Emotion::sadness},     {"miserable", Emotion::sadness},
    {"regret", Emotion::sadness},     {"lament", Emotion::sadness},
    {"somber", Emotion::sadness},     {"grieving", Emotion::sadness},
    {"loss", Emotion::sadness},       {"losses", Emotion::sadness},

    {"joy", Emotion::joy},            {"happy", Emotion::joy},
    {"happiness", Emotion::joy},      {"celebrate", Emotion::joy},
    {"celebrates", Emotion::joy},     {"celebration", Emotion::joy},
    {"cheerful", Emotion::joy},       {"delight", Emotion::joy},
    {"delighted", Emotion::joy},      {"thrilled", Emotion::joy},
    {"win", Emotion::joy},            {"wins", Emotion::joy},
    {"victory", Emotion::joy},        {"triumph", Emotion::joy},
    {"success", Emotion::joy},        {"successful", Emotion::joy},
    {"glad", Emotion::joy},           {"smiles", Emotion::joy},
    {"upbeat", Emotion::joy},         {"optimistic", Emotion::joy},
    {"cheers", Emotion::joy},         {"jubilant", Emotion::joy},
    {"festive", Emotion::joy},        {"proud", Emotion::joy},

    {"love", Emotion::love},          {"loves", Emotion::love},
    {"loved", Emotion::love},         {"beloved", Emotion::love},
    {"adore", Emotion::love},         {"adores", Emotion::love},
    {"affection", Emotion::love},     {"romance", Emotion::love},
    {"romantic", Emotion::love},      {"devoted", Emotion::love},
    {"devotion", Emotion::love},      {"cherish", Emotion::love},
    {"cherished", Emotion::love},     {"darling", Emotion::love},
    {"sweetheart", Emotion::love},    {"passion", Emotion::love},
    {"passionate", Emotion::love},    {"fond", Emotion::love},
    {"fondness", Emotion::love},      {"caring", Emotion::love},
    {"tender", Emotion::love},        {"warmth", Emotion::love},
    {"embrace", Emotion::love},       {"admiration", Emotion::love},

    {"surprise", Emotion::surprise},  {"surprising", Emotion::surprise},
    {"surprised", Emotion::surprise}, {"shocking", Emotion::surprise},
    {"shocked", Emotion::surprise},   {"shock", Emotion::surprise},
    {"stunning", Emotion::surprise},  {"stunned", Emotion::surprise},
    {"astonishing", Emotion::surprise}, {"astonished", Emotion::surprise},
    {"unexpected", Emotion::surprise}, {"sudden", Emotion::surprise},
    {"suddenly", Emotion::surprise},  {"dramatic", Emotion::surprise},
    {"bombshell", Emotion::surprise}, {"startling", Emotion::surprise},
    {"startled", Emotion::surprise},  {"remarkable", Emotion::surprise},
    {"unprecedented", Emotion::surprise}, {"incredible", Emotion::surprise},
    {"unbelievable", Emotion::surprise}, {"amazing", Emotion::surprise},
    {"amazed", Emotion::surprise},    {"staggering", Emotion::surprise},
    {"jolt", Emotion::surprise},
};

}  // namespace

const std::vector<std::pair<std::string, Emotion>>& builtin_lexicon_rows() {
    static const std::vector<std::pair<std::string, Emotion>> rows = [] {
        std::vector<std::pair<std::string, Emotion>> v;
        for (const auto& [word, emotion] : kRows) v.emplace_back(word, emotion);
        return v;
    }();
    return rows;
}

const Lexicon& builtin_lexicon() {
    static const Lexicon table = [] {
        Lexicon t;
        for (const auto& [word, emotion] : builtin_lexicon_rows()) t.emplace(word, emotion);
        return t;
    }();
    return table;
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open lexicon file: " + path);
    Lexicon table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw DomainError("lexicon line " + std::to_string(lineno) + ": missing tab");
        const std::string word = to_lower(trim(line.substr(0, tab)));
        const std::string emotion = trim(line.substr(tab + 1));
        if (word.empty())
            throw DomainError("lexicon line " + std::to_string(lineno) + ": empty word");
        table[word] = emotion_from_name(emotion);
    }
    return table;
}

bool is_sensational_word(const std::string& lower_word) {
    const Lexicon& table = builtin_lexicon();
    const auto it = table.find(lower_word);
    if (it == table.end()) return false;
    return it->second == Emotion::anger || it->second == Emotion::fear ||
           it->second == Emotion::surprise;
}

}  // namespace emotone
