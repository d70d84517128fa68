#pragma once

#include "qugame/cli/commands.hpp"
#include "qugame/cli/json_io.hpp"
#include "qugame/cli/render.hpp"
#include "qugame/cli/verify.hpp"
