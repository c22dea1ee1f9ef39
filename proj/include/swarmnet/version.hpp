#pragma once

namespace swarmnet {

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace swarmnet
