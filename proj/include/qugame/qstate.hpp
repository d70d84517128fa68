#pragma once

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"
#include "qugame/qstate/measure.hpp"
#include "qugame/qstate/random.hpp"
#include "qugame/qstate/state_vector.hpp"
#include "qugame/qstate/unitary.hpp"
