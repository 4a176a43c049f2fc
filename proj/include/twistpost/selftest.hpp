#pragma once

#include "twistpost/report.hpp"

namespace twistpost {

/// Runs every worked example of the library on its stated inputs. Each
/// check is named "<module>.<example>"; a check that throws is recorded as
/// failed with the exception text.
Report run_selftest();

}  // namespace twistpost
