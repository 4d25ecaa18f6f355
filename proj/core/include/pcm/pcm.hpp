#pragma once

// Umbrella header for the Pauli cloning machine library.

#include "pcm/bell.hpp"      // IWYU pragma: export
#include "pcm/bounds.hpp"    // IWYU pragma: export
#include "pcm/channel.hpp"   // IWYU pragma: export
#include "pcm/cloner.hpp"    // IWYU pragma: export
#include "pcm/linalg.hpp"    // IWYU pragma: export
