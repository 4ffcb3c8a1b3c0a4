#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pdectl {

/// The six classical spaces in which solutions may live.
enum class SignalSpace { Dprime, Cinfinity, Sprime, Schwartz, Eprime, Dtest };

enum class SpaceClass { InjectiveCogenerator, Injective, Flat };

SpaceClass classify(SignalSpace s);

/// Canonical short names: Dprime, Cinf, Sprime, S, Eprime, D.
std::string_view name(SignalSpace s);

/// Accepts the canonical names plus the long forms (Cinfinity, Schwartz, Dtest).
std::optional<SignalSpace> parse_signal_space(std::string_view text);

}  // namespace pdectl
