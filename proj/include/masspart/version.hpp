#pragma once

#define MASSPART_VERSION_MAJOR 0
#define MASSPART_VERSION_MINOR 1
#define MASSPART_VERSION_PATCH 0
#define MASSPART_VERSION "0.1.0"

namespace masspart {
inline const char* version() { return MASSPART_VERSION; }
} // namespace masspart
