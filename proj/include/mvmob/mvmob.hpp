// Umbrella header for the whole toolchain.
#pragma once

#include "mvmob/analysis.hpp"
#include "mvmob/codegen.hpp"
#include "mvmob/condition.hpp"
#include "mvmob/diagnostics.hpp"
#include "mvmob/ids.hpp"
#include "mvmob/lexer.hpp"
#include "mvmob/model.hpp"
#include "mvmob/parser.hpp"
#include "mvmob/printer.hpp"
#include "mvmob/project_io.hpp"
#include "mvmob/projection.hpp"
#include "mvmob/simulator.hpp"
#include "mvmob/validation.hpp"
#include "mvmob/values.hpp"
