#include "emotone/emotion.hpp"

#include <cmath>

#include "emotone/errors.hpp"

namespace emotone {

namespace {
constexpr std::array<std::string_view, kEmotionCount> kNames = {
    "anger", "fear", "sadness", "joy", "love", "surprise"};
}

std::string_view emotion_name(Emotion e) { return kNames[static_cast<std::size_t>(e)]; }

Emotion emotion_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kEmotionCount; ++i)
        if (kNames[i] == name) return static_cast<Emotion>(i);
    throw ContractError("unknown emotion name: " + std::string(name));
}

EmotionDistribution EmotionDistribution::normalized(const std::array<double, kEmotionCount>& raw) {
    std::array<double, kEmotionCount> clamped{};
    double sum = 0.0;
    for (std::size_t i = 0; i < kEmotionCount; ++i) {
        clamped[i] = raw[i] > 0.0 ? raw[i] : 0.0;
        sum += clamped[i];
    }
    if (!(sum > 0.0) || !std::isfinite(sum))
        throw ProtocolError("emotion scores sum to zero after clamping");
    EmotionDistribution d;
    for (std::size_t i = 0; i < kEmotionCount; ++i) d.p_[i] = clamped[i] / sum;
    return d;
}

EmotionDistribution EmotionDistribution::from_values(
    const std::array<double, kEmotionCount>& values, double tol) {
    EmotionDistribution d;
    d.p_ = values;
    if (!d.valid(tol)) throw DomainError("values do not form a probability distribution");
    return d;
}

double EmotionDistribution::sum() const {
    double s = 0.0;
    for (double v : p_) s += v;
    return s;
}

bool EmotionDistribution::valid(double tol) const {
    for (double v : p_)
        if (!(v >= 0.0 && v <= 1.0)) return false;
    return std::fabs(sum() - 1.0) <= tol;
}

}  // namespace emotone
