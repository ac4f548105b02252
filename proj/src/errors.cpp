// SPDX-License-Identifier: Apache-2.0
#include "lcu/errors.hpp"

namespace lcu {

const char* errc_name(errc c) {
    switch (c) {
    case errc::ok: return "ok";
    case errc::usage: return "usage";
    case errc::io: return "io";
    case errc::parse: return "parse";
    case errc::schema: return "schema";
    case errc::domain: return "domain";
    case errc::precision: return "precision";
    case errc::contract: return "contract";
    case errc::window: return "window";
    case errc::bracket: return "bracket";
    case errc::divergence: return "divergence";
    case errc::resolution: return "resolution";
    case errc::degenerate: return "degenerate";
    case errc::dimension: return "dimension";
    case errc::cutoff: return "cutoff";
    }
    return "unknown";
}

} // namespace lcu
