#pragma once

// JSON sources embedded at build time from data/, so the CLI runs with no
// configuration files present.
namespace ontoqual::defaults {

extern const char* const kDefaultModelJson;
extern const char* const kOperatorTableJson;

} // namespace ontoqual::defaults
