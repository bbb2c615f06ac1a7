// WebGL2 renderer: per-vertex colors, headlight diffuse shading.

import type { Geometry } from "./geometry.js";
import type { Mat4 } from "./math.js";

const VERTEX_SHADER = `#version 300 es
in vec3 position;
in vec3 normal;
in vec3 color;
uniform mat4 viewProjection;
out vec3 vNormal;
out vec3 vColor;
void main() {
  vNormal = normal;
  vColor = color;
  gl_Position = viewProjection * vec4(position, 1.0);
}`;

const FRAGMENT_SHADER = `#version 300 es
precision highp float;
in vec3 vNormal;
in vec3 vColor;
uniform vec3 lightDir;
out vec4 outColor;
void main() {
  float diffuse = abs(dot(normalize(vNormal), lightDir));
  outColor = vec4(vColor * (0.35 + 0.65 * diffuse), 1.0);
}`;

function compile(gl: WebGL2RenderingContext, type: number, source: string): WebGLShader {
  const shader = gl.createShader(type)!;
  gl.shaderSource(shader, source);
  gl.compileShader(shader);
  if (!gl.getShaderParameter(shader, gl.COMPILE_STATUS)) {
    throw new Error(`shader compile failed: ${gl.getShaderInfoLog(shader)}`);
  }
  return shader;
}

export class Scene {
  private gl: WebGL2RenderingContext;
  private program: WebGLProgram;
  private colorBuffer: WebGLBuffer;
  private indexCount = 0;
  private viewProjectionLocation: WebGLUniformLocation;
  private lightLocation: WebGLUniformLocation;

  constructor(private canvas: HTMLCanvasElement) {
    const gl = canvas.getContext("webgl2");
    if (!gl) throw new Error("WebGL2 is not available in this browser");
    this.gl = gl;
    this.program = gl.createProgram()!;
    gl.attachShader(this.program, compile(gl, gl.VERTEX_SHADER, VERTEX_SHADER));
    gl.attachShader(this.program, compile(gl, gl.FRAGMENT_SHADER, FRAGMENT_SHADER));
    gl.linkProgram(this.program);
    if (!gl.getProgramParameter(this.program, gl.LINK_STATUS)) {
      throw new Error(`program link failed: ${gl.getProgramInfoLog(this.program)}`);
    }
    gl.useProgram(this.program);
    gl.enable(gl.DEPTH_TEST);
    this.colorBuffer = gl.createBuffer()!;
    this.viewProjectionLocation = gl.getUniformLocation(this.program, "viewProjection")!;
    this.lightLocation = gl.getUniformLocation(this.program, "lightDir")!;
  }

  private bindAttribute(name: string, data: Float32Array | null, buffer: WebGLBuffer): void {
    const gl = this.gl;
    const location = gl.getAttribLocation(this.program, name);
    gl.bindBuffer(gl.ARRAY_BUFFER, buffer);
    if (data) gl.bufferData(gl.ARRAY_BUFFER, data, gl.STATIC_DRAW);
    gl.enableVertexAttribArray(location);
    gl.vertexAttribPointer(location, 3, gl.FLOAT, false, 0, 0);
  }

  setGeometry(geometry: Geometry): void {
    const gl = this.gl;
    this.bindAttribute("position", geometry.positions, gl.createBuffer()!);
    this.bindAttribute("normal", geometry.normals, gl.createBuffer()!);
    const indexBuffer = gl.createBuffer()!;
    gl.bindBuffer(gl.ELEMENT_ARRAY_BUFFER, indexBuffer);
    gl.bufferData(gl.ELEMENT_ARRAY_BUFFER, geometry.indices, gl.STATIC_DRAW);
    this.indexCount = geometry.indices.length;
  }

  setColors(colors: Float32Array): void {
    this.bindAttribute("color", colors, this.colorBuffer);
  }

  render(viewProjection: Mat4, lightDir: [number, number, number]): void {
    const gl = this.gl;
    const w = this.canvas.clientWidth * devicePixelRatio;
    const h = this.canvas.clientHeight * devicePixelRatio;
    if (this.canvas.width !== w || this.canvas.height !== h) {
      this.canvas.width = w;
      this.canvas.height = h;
    }
    gl.viewport(0, 0, gl.drawingBufferWidth, gl.drawingBufferHeight);
    gl.clearColor(0.12, 0.13, 0.15, 1);
    gl.clear(gl.COLOR_BUFFER_BIT | gl.DEPTH_BUFFER_BIT);
    gl.useProgram(this.program);
    gl.uniformMatrix4fv(this.viewProjectionLocation, false, viewProjection);
    gl.uniform3fv(this.lightLocation, lightDir);
    if (this.indexCount > 0) {
      gl.drawElements(gl.TRIANGLES, this.indexCount, gl.UNSIGNED_INT, 0);
    }
  }
}
