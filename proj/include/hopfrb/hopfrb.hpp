#pragma once

#include "hopfrb/bridge.hpp"
#include "hopfrb/constructions.hpp"
#include "hopfrb/group.hpp"
#include "hopfrb/hopf.hpp"
#include "hopfrb/linalg.hpp"
#include "hopfrb/rb_group.hpp"
#include "hopfrb/rb_hopf.hpp"
#include "hopfrb/rb_lie.hpp"
#include "hopfrb/report.hpp"
#include "hopfrb/scalar.hpp"
