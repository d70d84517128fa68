#pragma once

#include "qugame/qalgo/bernstein_vazirani.hpp"
#include "qugame/qalgo/grover.hpp"
#include "qugame/qalgo/number_theory.hpp"
#include "qugame/qalgo/shor.hpp"
