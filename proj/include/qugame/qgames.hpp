#pragma once

#include "qugame/qgames/card.hpp"
#include "qugame/qgames/estimation_game.hpp"
#include "qugame/qgames/ewl.hpp"
#include "qugame/qgames/guess.hpp"
#include "qugame/qgames/newcomb.hpp"
#include "qugame/qgames/report.hpp"
#include "qugame/qgames/secret_sharing.hpp"
#include "qugame/qgames/spin_flip.hpp"
#include "qugame/qgames/telepathy.hpp"
#include "qugame/qgames/teleport.hpp"
