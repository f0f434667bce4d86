#include "emotone/prompts.hpp"

namespace emotone::prompts {

std::string wrap_block(std::string_view label, std::string_view body) {
    std::string out;
    out += label;
    out += ' ';
    out += kBlockOpen;
    out += '\n';
    out += body;
    out += '\n';
    out += kBlockClose;
    return out;
}

std::string extract_block(std::string_view prompt, std::string_view label) {
    std::string opener;
    opener += label;
    opener += ' ';
    opener += kBlockOpen;
    opener += '\n';
    const std::size_t start = prompt.find(opener);
    if (start == std::string_view::npos) return {};
    const std::size_t body_start = start + opener.size();
    std::string closer;
    closer += '\n';
    closer += kBlockClose;
    const std::size_t end = prompt.find(closer, body_start);
    if (end == std::string_view::npos) return {};
    return std::string(prompt.substr(body_start, end - body_start));
}

bool has_block(std::string_view prompt, std::string_view label) {
    std::string opener;
    opener += label;
    opener += ' ';
    opener += kBlockOpen;
    return prompt.find(opener) != std::string_view::npos;
}

}  // namespace emotone::prompts
