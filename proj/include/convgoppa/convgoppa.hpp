/*
   Copyright 2026 The convgoppa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONVGOPPA_CONVGOPPA_HPP
#define CONVGOPPA_CONVGOPPA_HPP

#include "convgoppa/cgc.hpp"
#include "convgoppa/code.hpp"
#include "convgoppa/distance.hpp"
#include "convgoppa/error.hpp"
#include "convgoppa/expr.hpp"
#include "convgoppa/extend.hpp"
#include "convgoppa/gf.hpp"
#include "convgoppa/io.hpp"
#include "convgoppa/poly.hpp"
#include "convgoppa/polymat.hpp"
#include "convgoppa/scan.hpp"

#endif
