#pragma once

namespace hrange::cli {

// Exit codes: 0 ok, 1 usage, 2 overflow, 3 memory cap, 4 corrupt checkpoint,
// 5 fixture failure.
int run_cli(int argc, char** argv);

}  // namespace hrange::cli
