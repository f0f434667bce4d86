#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace emotone {

enum class Emotion { anger = 0, fear, sadness, joy, love, surprise };

inline constexpr std::size_t kEmotionCount = 6;

inline constexpr std::array<Emotion, kEmotionCount> kEmotions = {
    Emotion::anger, Emotion::fear, Emotion::sadness,
    Emotion::joy,   Emotion::love, Emotion::surprise};

std::string_view emotion_name(Emotion e);

// Throws ContractError for an unknown name.
Emotion emotion_from_name(std::string_view name);

// Probability distribution over the six emotions. Construct via
// EmotionDistribution::normalized so the invariants (components in [0,1],
// sum 1 within 1e-9) hold.
class EmotionDistribution {
  public:
    EmotionDistribution() : p_{} { p_.fill(1.0 / kEmotionCount); }

    // Clamps negative raw scores to 0 and divides by the sum.
    // Throws ProtocolError when the clamped scores sum to 0.
    static EmotionDistribution normalized(const std::array<double, kEmotionCount>& raw);

    // Exact passthrough for values that are already a distribution
    // (deserialization); validates the invariants instead of renormalizing,
    // so artifact round-trips stay byte-identical.
    static EmotionDistribution from_values(const std::array<double, kEmotionCount>& values,
                                           double tol = 1e-9);

    double operator[](Emotion e) const { return p_[static_cast<std::size_t>(e)]; }
    double at(std::size_t i) const { return p_[i]; }
    const std::array<double, kEmotionCount>& values() const { return p_; }

    double sum() const;
    bool valid(double tol = 1e-9) const;

  private:
    std::array<double, kEmotionCount> p_;
};

}  // namespace emotone
