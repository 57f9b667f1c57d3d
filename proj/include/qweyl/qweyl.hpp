#pragma once

#include "qweyl/action.hpp"
#include "qweyl/algebras.hpp"
#include "qweyl/catalog.hpp"
#include "qweyl/center.hpp"
#include "qweyl/coefficients.hpp"
#include "qweyl/commpoly.hpp"
#include "qweyl/engine.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/fibers.hpp"
#include "qweyl/momentmaps.hpp"
#include "qweyl/ore.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/presentation.hpp"
#include "qweyl/printer.hpp"
