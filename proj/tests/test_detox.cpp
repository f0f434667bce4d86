#include <doctest.h>

#include <string>

#include "emotone/detox.hpp"
#include "emotone/errors.hpp"
#include "emotone/prompts.hpp"
#include "emotone/text.hpp"
#include "support/backends.hpp"

using namespace emotone;
using testsupport::RuleChatBackend;
using testsupport::ScriptedChatBackend;

namespace {

std::string repeat_chars(char c, std::size_t n) { return std::string(n, c); }

// One compliant sentence with roughly the original's length.
std::string compliant_single_sentence(const std::string& original) {
    std::string s(original.size() - 1, 'x');
    s.back() = '.';
    for (std::size_t i = 10; i + 10 < s.size(); i += 10) s[i] = ' ';
    s = "Report " + s.substr(7);
    return s;
}

}  // namespace

TEST_CASE("build_prompts embeds the original and the mode instructions") {
    const std::string text = "Scorching outrage erupts over prices";
    SUBCASE("BALANCED") {
        const Prompts p = build_prompts(text, PresentationMode::BALANCED);
        CHECK(p.system_prompt == std::string(prompts::kRewriteSystem));
        CHECK(p.user_prompt.find("single sentence") != std::string::npos);
        CHECK(p.user_prompt.find("replace sensational vocabulary") == std::string::npos);
        CHECK(p.user_prompt.find("Replace sensational vocabulary") != std::string::npos);
        CHECK(p.user_prompt.find(text) != std::string::npos);
        CHECK(p.user_prompt.find("within ±20% of the original") != std::string::npos);
        CHECK(p.user_prompt.find("supplementary") == std::string::npos);
    }
    SUBCASE("COOL") {
        const Prompts p = build_prompts(text, PresentationMode::COOL);
        CHECK(p.user_prompt.find("append one supplementary sentence") != std::string::npos);
        CHECK(p.user_prompt.find("exactly two sentences") != std::string::npos);
        CHECK(p.user_prompt.find(text) != std::string::npos);
        CHECK(p.user_prompt.find("within ±20% of the original") != std::string::npos);
    }
    SUBCASE("RAW is a contract error") {
        CHECK_THROWS_AS(build_prompts(text, PresentationMode::RAW), ContractError);
    }
}

TEST_CASE("rewrite passes prompts through and enforces fixed sampling") {
    ScriptedChatBackend backend({"  A calm sentence.  "});
    RewriteRequest request;
    request.original = "Some original text.";
    request.mode = PresentationMode::BALANCED;

    CHECK(rewrite(request, backend) == "A calm sentence.");
    REQUIRE(backend.requests.size() == 1);
    CHECK(backend.requests[0].temperature == kRewriteTemperature);
    CHECK(backend.requests[0].max_tokens == kRewriteMaxTokens);
    CHECK(backend.requests[0].system == std::string(prompts::kRewriteSystem));

    SUBCASE("empty reply is a protocol error") {
        ScriptedChatBackend empty({""});
        CHECK_THROWS_AS(rewrite(request, empty), ProtocolError);
    }
    SUBCASE("tampered sampling parameters are contract errors") {
        request.temperature = 0.7;
        CHECK_THROWS_AS(rewrite(request, backend), ContractError);
        request.temperature = kRewriteTemperature;
        request.max_output_tokens = 10;
        CHECK_THROWS_AS(rewrite(request, backend), ContractError);
    }
}

TEST_CASE("validate_rewrite length bound is closed at exactly [0.8L, 1.2L]") {
    const std::string original = repeat_chars('o', 99) + ".";  // 100 chars
    const auto status = [&](std::size_t n) {
        std::string rewritten(n - 1, 'x');
        rewritten += '.';
        return validate_rewrite(original, rewritten, PresentationMode::BALANCED);
    };
    CHECK(status(80) == RewriteStatus::ok);
    CHECK(status(79) == RewriteStatus::length_violation);
    CHECK(status(120) == RewriteStatus::ok);
    CHECK(status(121) == RewriteStatus::length_violation);
    CHECK(status(100) == RewriteStatus::ok);

    SUBCASE("non-multiple-of-five original length") {
        const std::string short_original = "1234567";  // L=7 -> [5.6, 8.4] -> 6..8 chars
        const auto short_status = [&](const std::string& r) {
            return validate_rewrite(short_original, r, PresentationMode::BALANCED);
        };
        CHECK(short_status("12345") == RewriteStatus::length_violation);
        CHECK(short_status("123456") == RewriteStatus::ok);
        CHECK(short_status("12345678") == RewriteStatus::ok);
        CHECK(short_status("123456789") == RewriteStatus::length_violation);
    }
}

TEST_CASE("validate_rewrite sentence counts: BALANCED=1, COOL=2") {
    const std::string original = repeat_chars('o', 40);
    CHECK(validate_rewrite(original, "One sentence with some padding chars.",
                           PresentationMode::BALANCED) == RewriteStatus::ok);
    CHECK(validate_rewrite(original, "Two sentences here. Second one is this.",
                           PresentationMode::BALANCED) == RewriteStatus::sentence_count_violation);
    CHECK(validate_rewrite(original, "Two sentences here. Second one is this.",
                           PresentationMode::COOL) == RewriteStatus::ok);
    CHECK(validate_rewrite(original, "One. Two here now. And three more.",
                           PresentationMode::COOL) == RewriteStatus::sentence_count_violation);
    CHECK(validate_rewrite(original, "No terminator but right length here ok",
                           PresentationMode::BALANCED) == RewriteStatus::ok);
}

TEST_CASE("detoxify happy path with a compliant scripted backend") {
    const std::string original =
        "Officials announced the quarterly results during the briefing today.";
    RuleChatBackend backend([&](const ChatRequest& request) -> std::string {
        const bool cool = request.user.find("supplementary sentence") != std::string::npos;
        const std::string body = compliant_single_sentence(original);
        if (!cool) return body;
        // split the budget across two sentences
        std::string first = body.substr(0, body.size() / 2 - 1) + ".";
        std::string second = "More " + body.substr(body.size() / 2 + 6);
        return first + " " + second;
    });

    const RewriteBundle bundle = detoxify(original, backend);
    CHECK(bundle.original == original);
    CHECK(bundle.balanced_status == RewriteStatus::ok);
    CHECK(bundle.cool_status == RewriteStatus::ok);
    CHECK_FALSE(bundle.balanced.empty());
    CHECK_FALSE(bundle.cool.empty());
    CHECK(backend.requests.size() == 2);  // one call per mode, no retries
}

TEST_CASE("detoxify retries exactly twice then flags") {
    const std::string original = repeat_chars('o', 59) + ".";
    // Always three sentences: COOL keeps failing the sentence check.
    RuleChatBackend backend([&](const ChatRequest&) {
        return std::string("First bit of text here. Second bit of text. Third one.");
    });

    const RewriteBundle bundle = detoxify(original, backend);
    CHECK(bundle.balanced_status == RewriteStatus::accepted_after_retries);
    CHECK(bundle.cool_status == RewriteStatus::accepted_after_retries);
    CHECK(backend.requests.size() == 2 * kMaxRewriteAttempts);  // 3 attempts per mode

    // retries carry the corrective instruction, first attempts do not
    CHECK(backend.requests[0].user.find("violated a constraint") == std::string::npos);
    CHECK(backend.requests[1].user.find("violated a constraint") != std::string::npos);
    CHECK(backend.requests[2].user.find("violated a constraint") != std::string::npos);
}

TEST_CASE("detoxify rejects empty originals") {
    ScriptedChatBackend backend({"x."});
    CHECK_THROWS_AS(detoxify("", backend), ContractError);
    CHECK_THROWS_AS(detoxify("   ", backend), ContractError);
}

TEST_CASE("mock chat backend deletes sensational words") {
    auto backend = make_mock_chat_backend();
    const std::string original = "Scorching outrage erupts over prices";

    RewriteRequest request;
    request.original = original;
    request.mode = PresentationMode::BALANCED;
    const std::string rewritten = rewrite(request, *backend);
    CHECK(rewritten == "erupts over prices.");

    SUBCASE("COOL appends a supplementary sentence within the length budget") {
        const std::string longer =
            "Scorching outrage erupts over fuel prices as analysts track the dispute between "
            "both delegations and regulators review the newest tariff documents again.";
        request.original = longer;
        request.mode = PresentationMode::COOL;
        const std::string cool = rewrite(request, *backend);
        CHECK(count_sentences(cool) == 2);
        CHECK(cool.find("Scorching") == std::string::npos);
        CHECK(cool.find("outrage") == std::string::npos);
    }
    SUBCASE("bundle statuses are ok for texts with few sensational words") {
        const std::string calm =
            "Officials announced the quarterly results to reporters during the annual briefing "
            "held in the capital on Tuesday morning without major schedule changes.";
        const RewriteBundle bundle = detoxify(calm, *backend);
        CHECK(bundle.balanced_status == RewriteStatus::ok);
        CHECK(bundle.cool_status == RewriteStatus::ok);
    }
}
